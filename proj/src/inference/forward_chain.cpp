#include "symbcot/inference/forward_chain.hpp"

#include <algorithm>
#include <set>

namespace symbcot::inference {

using logic::SignedLiteral;
using logic::Term;

const Derivation* ChainResult::find(const SignedLiteral& lit) const {
  for (const auto& d : derivations)
    if (d.literal == lit) return &d;
  return nullptr;
}

namespace {

bool unify_args(const std::vector<Term>& pattern, const std::vector<Term>& ground, Substitution& s) {
  if (pattern.size() != ground.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const Term& p = pattern[i];
    if (p.is_variable()) {
      auto [it, inserted] = s.emplace(p.name(), ground[i]);
      if (!inserted && !(it->second == ground[i])) return false;
    } else if (!(p == ground[i])) {
      return false;
    }
  }
  return true;
}

SignedLiteral apply(const SignedLiteral& lit, const Substitution& s) {
  SignedLiteral out{lit.predicate, {}, lit.polarity};
  for (const auto& t : lit.args) out.args.push_back(t.is_variable() ? s.at(t.name()) : t);
  return out;
}

class Chainer {
 public:
  explicit Chainer(const logic::KnowledgeBase& kb) : kb_(kb) {
    for (const auto& f : kb.facts()) add({f, 0, std::nullopt});
  }

  // Applies every rule against the literals known before this round.
  std::vector<Derivation> round(std::size_t depth) {
    const std::size_t known = known_.size();
    std::vector<Derivation> fresh;
    std::set<SignedLiteral> fresh_set;
    for (const auto& rule : kb_.rules()) {
      Substitution s;
      join(rule, 0, s, known, [&](const Substitution& full) {
        auto head = apply(rule.head, full);
        if (index_.contains(head) || fresh_set.contains(head)) return;
        fresh_set.insert(head);
        Substitution used;
        for (const auto& v : rule.variables()) used.emplace(v, full.at(v));
        fresh.push_back({head, depth, RuleApplication{rule, used}});
      });
    }
    return fresh;
  }

  void add(Derivation d) {
    if (index_.contains(d.literal.negated())) throw logic::InconsistencyError(d.literal);
    index_.insert(d.literal);
    by_key_[{d.literal.predicate, d.literal.polarity}].push_back(known_.size());
    known_.push_back(std::move(d));
  }

  std::vector<Derivation> take() { return std::move(known_); }

 private:
  template <class F>
  void join(const logic::Rule& rule, std::size_t i, Substitution& s, std::size_t limit, F&& emit) {
    if (i == rule.body.size()) return emit(s);
    const auto& pattern = rule.body[i];
    auto it = by_key_.find({pattern.predicate, pattern.polarity});
    if (it == by_key_.end()) return;
    for (std::size_t idx : it->second) {
      if (idx >= limit) break;  // indices are appended in increasing order
      Substitution next = s;
      if (!unify_args(pattern.args, known_[idx].literal.args, next)) continue;
      join(rule, i + 1, next, limit, emit);
    }
  }

  const logic::KnowledgeBase& kb_;
  std::vector<Derivation> known_;
  std::set<SignedLiteral> index_;
  std::map<std::pair<std::string, bool>, std::vector<std::size_t>> by_key_;
};

}  // namespace

ChainResult forward_chain(const logic::KnowledgeBase& kb, std::size_t max_depth) {
  Chainer chainer(kb);
  ChainResult result;
  for (std::size_t depth = 1;; ++depth) {
    auto fresh = chainer.round(depth);
    if (fresh.empty()) break;
    if (depth > max_depth) {
      result.truncated = true;
      break;
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const Derivation& a, const Derivation& b) { return a.literal < b.literal; });
    for (auto& d : fresh) chainer.add(std::move(d));
  }
  result.derivations = chainer.take();
  std::stable_sort(result.derivations.begin(), result.derivations.end(),
                   [](const Derivation& a, const Derivation& b) {
                     return a.depth != b.depth ? a.depth < b.depth : a.literal < b.literal;
                   });
  return result;
}

logic::Label decide(const logic::KnowledgeBase& kb, const SignedLiteral& query, std::size_t max_depth) {
  if (!query.is_ground()) throw std::invalid_argument("query must be ground: " + logic::to_string(query));
  auto result = forward_chain(kb, max_depth);
  if (result.find(query)) return logic::Label::True;
  if (result.find(query.negated())) return logic::Label::False;
  return logic::Label::Unknown;
}

}  // namespace symbcot::inference
