#!/usr/bin/env python3
"""Writes tests/fixtures/transcripts/minicorpus.json: scripted model responses
for every mini-corpus item, keyed {id: {stage: response}}.

Translator responses are the hand-checked translations, so TranslateThenSolve
executes on every item. SymbCoT reaches gold everywhere; on tiger the solver
errs and the verifier corrects it. Naive and CoT carry a few realistic mistakes
so baseline reports are not uniformly perfect.
"""
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent

FOL_PLAN = (
    "Plan:\n"
    "1. Identify the premises relevant to the query.\n"
    "2. Instantiate the quantified premises for the constants mentioned in the query.\n"
    "3. Chain the instantiated rules with Modus Ponens and Modus Tollens.\n"
    "4. Decide whether the query, its negation, or neither follows."
)
CSP_PLAN = (
    "Plan:\n"
    "1. Fix the variables pinned by direct constraints.\n"
    "2. Propagate the ordering and difference constraints to the remaining variables.\n"
    "3. Enumerate the assignments that satisfy every constraint.\n"
    "4. Evaluate each option's query against those assignments and pick the one the question asks for."
)

ITEMS = {
    "hawk": {
        "solver": (
            "Step 1: By ∃x (Bird(x) ∧ Hawk(x)), let a be a bird that is a hawk (Existential Instantiation).\n"
            "Step 2: From ∀x (Hawk(x) → ¬Lands(x)), Hawk(a) → ¬Lands(a) (Universal Instantiation).\n"
            "Step 3: Hawk(a), so ¬Lands(a) (Modus Ponens).\n"
            "Step 4: Bird(a) ∧ ¬Lands(a) contradicts ∀x (Bird(x) → Lands(x)).\n"
            "Final answer: {false}"
        ),
        "verifier": (
            "Context verification: every premise matches its natural-language sentence.\n"
            "Logical verification: the witness a is a bird and a hawk, hawks never land, so not all birds land. "
            "The steps are valid.\nFinal answer: {false}"
        ),
        "cot": "Some birds are hawks and hawks never land, so at least one bird does not land. The statement is false.\nThe correct option is: B)",
        "naive": "The correct option is: B)",
    },
    "max": {
        "solver": (
            "Step 1: Yumpus(Max, True).\n"
            "Step 2: Yumpus($x, True) ⇒ Dumpus($x, True), so Dumpus(Max, True).\n"
            "Step 3: Dumpus($x, True) ⇒ Wumpus($x, True), so Wumpus(Max, True).\n"
            "Step 4: Wumpus($x, True) ⇒ Impus($x, True), so Impus(Max, True).\n"
            "Step 5: Impus($x, True) ⇒ Tumpus($x, True), so Tumpus(Max, True).\n"
            "Step 6: Tumpus($x, True) ⇒ Sour($x, False), so Sour(Max, False).\n"
            "The statement Sour(Max, True) is false.\nFinal answer: {false}"
        ),
        "verifier": (
            "Every rule application is a valid Modus Ponens step on the translated rules. "
            "Sour(Max, False) contradicts Sour(Max, True).\nFinal answer: {false}"
        ),
        "cot": (
            "Max is a yumpus. Each yumpus is a dumpus, dumpuses are wumpuses, every wumpus is an impus, "
            "and impuses are tumpuses. Tumpuses are not sour, so Max is not sour.\nThe correct option is: B)"
        ),
        "naive": "The correct option is: B)",
    },
    "tiger": {
        "solver": (
            "Step 1: Likes(tiger, squirrel, True) and Likes(tiger, cow, True), so Visits(tiger, tiger, True).\n"
            "Step 2: Nothing states directly whether the tiger is young.\n"
            "Final answer: {unknown}"
        ),
        "verifier": (
            "The original execution stopped early. Visits(tiger, tiger, True) gives Nice(tiger, True); "
            "Nice(tiger, True) gives Sees(tiger, tiger, True); Nice and Sees give Young(tiger, True). "
            "So Young(tiger, False) is false and the answer should be refined.\nFinal answer: {false}"
        ),
        "cot": (
            "The tiger likes the squirrel and the cow, so it visits the tiger. Things that visit the tiger are nice, "
            "nice things see the tiger, and nice things that see the tiger are young. The tiger is young, so the "
            "statement is false.\nThe correct option is: B)"
        ),
        "naive": "The correct option is: C)",
    },
    "anne": {
        "solver": (
            "Step 1: The facts give Quite(Anne, True), not Quiet(Anne, True).\n"
            "Step 2: Quite(Anne, True) ⇒ Red(Anne, True), so Red(Anne, True); Red ⇒ Young gives Young(Anne, True); "
            "Young ⇒ Furry gives Furry(Anne, True).\n"
            "Step 3: White needs Green or Furry ∧ Quiet, and Quiet(Anne, True) is not derivable.\n"
            "White(Anne, True) is unknown.\nFinal answer: {unknown}"
        ),
        "verifier": (
            "Neither White(Anne, True) nor White(Anne, False) follows from the translated premises, "
            "so under the open-world reading the answer stays unknown.\nFinal answer: {unknown}"
        ),
        "cot": (
            "Anne is quiet, so Anne is red. Red people are young and young people are furry. "
            "Anne is furry and quiet, so Anne is white.\nThe correct option is: A)"
        ),
        "naive": "The correct option is: A)",
    },
    "erin": {
        "solver": (
            "Step 1: Green(Erin, True).\n"
            "Step 2: Green($x, True) ⇒ White($x, True), so White(Erin, True).\nFinal answer: {true}"
        ),
        "verifier": "The single Modus Ponens step is valid.\nFinal answer: {true}",
        "cot": "Erin is green, and green people are white. So Erin is white.\nThe correct option is: A)",
        "naive": "The correct option is: A)",
    },
    "blake_mcfall": {
        "solver": (
            "Step 1: FiveStory(emmet) ∧ LocatedIn(emmet, portland), so LocatedIn(emmet, portland).\n"
            "Step 2: SameBuilding(emmet, blakeMcFall).\n"
            "Step 3: Instantiating the same-building premise gives LocatedIn(blakeMcFall, portland).\n"
            "Final answer: {true}"
        ),
        "verifier": "Both instantiation steps are valid and the premises match the context.\nFinal answer: {true}",
        "cot": (
            "The Emmet Building is in Portland, Oregon, and it is another name for the Blake McFall Company "
            "Building, so that building is in Portland.\nThe correct option is: A)"
        ),
        "naive": "The correct option is: A)",
    },
    "ben": {
        "solver": (
            "Step 1: Suppose Yellow(ben); then Simpsons(ben) and Loved(ben), contradicting ¬Loved(ben).\n"
            "Step 2: Suppose Ugly(ben); then FamilyGuy(ben) and Loved(ben), again a contradiction.\n"
            "Step 3: So ¬Yellow(ben) ∧ ¬Ugly(ben), and Yellow(ben) ∨ Ugly(ben) is false by contradiction.\n"
            "Final answer: {false}"
        ),
        "verifier": "Both cases of the disjunction lead to Loved(ben), so the statement is false.\nFinal answer: {false}",
        "cot": (
            "Yellow characters are from the Simpsons and are loved by children; ugly characters are from Family Guy "
            "and are loved by children. Ben is not loved by children, so Ben is neither.\nThe correct option is: B)"
        ),
        "naive": "The correct option is: C)",
    },
    "miroslav": {
        "solver": (
            "Step 1: ChoralConductor(miroslav), so Musician(miroslav).\n"
            "Step 2: ∃x (Musician(x) ∧ Love(x, music)) names some musician, not necessarily Miroslav.\n"
            "Neither Love(miroslav, music) nor its negation follows.\nFinal answer: {uncertain}"
        ),
        "verifier": "Existential Instantiation introduces a fresh constant, so nothing about Miroslav follows.\nFinal answer: {uncertain}",
        "cot": (
            "Miroslav is a choral conductor and so a musician. Only some musicians love music, so we cannot tell.\n"
            "The correct option is: C)"
        ),
        "naive": "The correct option is: A)",
    },
    "car": {
        "solver": (
            "station_wagon == 1. minivan > convertible with the remaining values 2 and 3 gives convertible == 2 and "
            "minivan == 3. Only B holds.\nTherefore, the final answer is B."
        ),
        "verifier": "The assignment station_wagon = 1, convertible = 2, minivan = 3 satisfies every constraint. "
        "Thus, the answer B should remain unchanged.",
        "cot": "The station wagon is oldest and the minivan is newer than the convertible, so the convertible is second-newest.\nThe correct option is: B)",
        "naive": "The correct option is: B)",
    },
    "birds": {
        "solver": (
            "owl == 1, raven == 3, quail == 5. robin < raven leaves robin == 2 and falcon == 4. "
            "The quail is the rightmost.\nTherefore, the final answer is A."
        ),
        "verifier": "The order owl, robin, raven, falcon, quail satisfies every constraint. "
        "Thus, the answer A should remain unchanged.",
        "cot": "The quail is the rightmost, as stated directly.\nThe correct option is: A)",
        "naive": "The correct option is: A)",
    },
    "lockers": {
        "solver": (
            "Fred takes locker 3, so a girl shares locker 3 with him. Rachel cannot share, so she is alone in locker 1 "
            "or 2. Nita and Trisha cannot be adjacent, so the girls occupy lockers 1 and 3 or 2 and 3 beside Rachel. "
            "Juan must share with a girl, and the only girl-held locker left without a boy is locker 1 in every "
            "arrangement that keeps all five lockers used.\nTherefore, the final answer is A."
        ),
        "verifier": "Re-checking each arrangement, Juan is always in locker 1. "
        "Thus, the answer A should remain unchanged.",
        "cot": "Fred is in locker 3 and Rachel cannot share, so Juan must share locker 1 with a girl.\nThe correct option is: A)",
        "naive": "The correct option is: D)",
    },
    "tours": {
        "solver": (
            "Sales occupies two consecutive days. If Tuesday and Thursday had the same division it would have to be "
            "Operations or Production; Sales on Wednesday would then need Tuesday or Thursday as its pair, and the "
            "other placements violate the Monday, Wednesday or Thursday restrictions. So C cannot be true.\n"
            "Therefore, the final answer is C."
        ),
        "verifier": "Every schedule satisfying the restrictions gives Tuesday and Thursday different divisions. "
        "Thus, the answer C should remain unchanged.",
        "cot": "Tuesday and Thursday can never share a division under the Sales restriction.\nThe correct option is: C)",
        "naive": "The correct option is: E)",
    },
}


def main():
    corpus = json.loads((ROOT / "data" / "minicorpus.json").read_text())
    out = {}
    for item in corpus:
        scripted = ITEMS[item["id"]]
        family = "csp" if item["dataset"] in ("LogicalDeduction", "AR-LSAT") else "fol"
        out[item["id"]] = {
            "translator": item["translation"],
            "planner": CSP_PLAN if family == "csp" else FOL_PLAN,
            **scripted,
        }
    dest = ROOT / "tests" / "fixtures" / "transcripts" / "minicorpus.json"
    dest.parent.mkdir(parents=True, exist_ok=True)
    dest.write_text(json.dumps(out, indent=1, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
