#!/usr/bin/env python3
"""Regenerates data/templates/<family>/<stage>.txt.

Each file holds one template followed by demo input/output pairs. Demo
inputs are the template rendered with the demo's bindings, so editing a
template here keeps its demos consistent.
"""
import pathlib
import re

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "templates"

FOL_RULES = ("The First-Order Logic inference rules include but are not limited to: Modus Ponens, "
             "Modus Tollens, Hypothetical Syllogism, Disjunctive Syllogism, Universal Instantiation, "
             "Existential Instantiation, Conjunction, Simplification, Resolution, Transitivity.")


def render(template, bindings):
    return re.sub(r"\{(context|question|options|premises_sym|plan|reasoning)\}",
                  lambda m: bindings[m.group(1)], template)


def fol_options(family):
    third = {"prontoqa": None, "proofwriter": "Unknown", "folio": "Uncertain"}[family]
    opts = ["A) True", "B) False"] + ([f"C) {third}"] if third else [])
    return "\n".join(opts)


# ---------------------------------------------------------------------------
# Templates

def fol_translator(family):
    if family == "folio":
        body = ("Task Description: You are given a problem description and a question. The task is to:\n"
                "1. Define all the predicates in the problem.\n"
                "2. Parse the problem into logic premises in First-Order Logic, using ∀, ∃, ¬, ∧, ∨, →, ↔ and ⊕.\n"
                "3. Parse the statement in the question into a First-Order Logic query.\n"
                "Follow each line with ::: and the natural-language sentence it translates.\n")
    else:
        body = ("Task Description: You are given a problem description and a question. The task is to:\n"
                "1. Define all the predicates in the problem.\n"
                "2. Parse the problem into logic rules based on the defined predicates.\n"
                "3. Write all the facts mentioned in the problem.\n"
                "4. Parse the question into the logic form.\n"
                "Write every literal with its truth value, e.g. Shy(Alex, False), and rules as "
                "Jompus($x, True) ⇒ Fruity($x, True). Follow each line with ::: and the sentence it translates.\n")
    return body + "\nProblem:\n{context}\n\nQuestion:\n{question}\n"


def fol_planner(family):
    return ("Task: Can you derive a step-by-step plan that can use the premises and First-Order Logic "
            "inference rules to infer new knowledge if needed, in order to prove the statement? Start with "
            "identifying the goal and break down the necessary logical inference step by step.\n\n"
            "First-Order Logic Inference Rules:\n" + FOL_RULES + "\n\n"
            "Context:\n{context}\n\n{premises_sym}\n")


def fol_solver(family):
    fmt = {"prontoqa": "{true/false}", "proofwriter": "{true/false/unknown}",
           "folio": "{true/false/uncertain}"}[family]
    return ("Task: Based on the premises, question and plan, execute each step by selecting relevant premises "
            "and making inference based on First-order Logic inference rules to solve the question. Ensure to "
            "follow the plan and indicate what First-Order Logic inference rules you used. End with the final "
            f"answer in the format {fmt}.\n\n"
            "First-Order Logic Inference Rules:\n" + FOL_RULES + "\n\n"
            "{premises_sym}\n\nQuestion:\n{question}\n{options}\n\nPlan:\n{plan}\n")


def fol_verifier(family):
    if family == "prontoqa":
        fmt = "using the format {true/false}. The answer should only be true or false but NOT unknown."
    else:
        fmt = "using the format {true/false/unknown}. The answer should be one of these three options."
    return ("Task: The task is to verify whether the original execution correctly determines the value of the "
            "given conclusion based on the context. You should abide by the First-Order Logic rules when "
            "checking the original execution and the conclusion.\n"
            "When verifying the logical process and the final answer, make sure you fully consider the following "
            "aspects before verification:\n"
            "1. Whether the logical process abides by the First-Order Logic inference rules.\n"
            "2. Assumption and Consistency Verification. Check whether the relevant facts or rules used in a "
            "logical step are indeed from the context or inferred from the previous steps. An assumption that "
            "does not exist in the context and was not inferred in a previous step is invalid; an assumption "
            "semantically equivalent to the context is valid.\n"
            "3. Whether the translation of the First-Order Logic for context and question is semantically "
            "consistent with the original natural language.\n"
            "4. Refinement of Logical Process: If the original execution violates any of the above steps, refine "
            "the logical process using the relevant premises and information correctly derived from previous steps.\n"
            f"5. If applicable, provide a detailed analysis of each step and a refined answer at the end, {fmt}\n"
            "6. Make sure the conclusion aligns with the information inferred from the logical steps.\n\n"
            "{premises_sym}\n\nQuestion:\n{question}\n{options}\n\nOriginal Execution:\n{reasoning}\n")


CSP_TRANSLATOR = (
    "Task Description: You are given a problem description. The task is to parse the problem as a constraint "
    "satisfaction problem, defining the domain, variables, and constraints.\n"
    "Write the domain endpoints as `1: meaning` lines, each variable as `name ∈ {values}`, each constraint as "
    "an expression over the variables followed by ::: and the sentence it encodes, and one query per option "
    "as `X) expression ::: option text`. Expressions may use ==, !=, <, <=, >, >=, +, -, |a - b|, and, or, "
    "not, -> and AllDifferentConstraint([...]).\n\n"
    "Problem:\n{context}\n\nQuestion:\n{question}\n\nOptions:\n{options}\n")

CSP_PLANNER = (
    "Task: Can you derive a step-by-step plan that can use the domain, variables and constraints relevant "
    "inference rules to choose the correct option satisfying all the constraints?\n\n"
    "Context:\n{context}\n\n{premises_sym}\n")

CSP_SOLVER = (
    "Task: The task is a constraint optimization problem, and you need to select the most appropriate option "
    "that is true from the given options. The domain, variables, constraints, and relevant plan will be given "
    "to you to solve the question.\n"
    "There will be only one answer, so choose the one you think is the most likely.\n"
    "Here is a workflow you need to follow to solve the constraint optimization problem:\n"
    "1.Domain and Variables: Identify the possible values (domain) and variables involved.\n"
    "2.Apply Constraints: Read and apply the specific constraints to the variables.\n"
    "3.List Possibilities: Enumerate all potential combinations or orders that could satisfy the constraints.\n"
    "4.Determine Order/Values: Establish the correct order or specific values for each variable as per the constraints.\n"
    "5.Demonstrate Satisfaction of Constraints: Provide a specific example that shows all constraints are met.\n"
    "6.Evaluate Queries: Analyze each query against the established order or values.\n"
    "7.Identify Correct Answer: Choose the option that aligns with the determined order/values.\n"
    "8.Present Final Answer: Clearly state the solution that satisfies the constraints and query.\n\n"
    "{premises_sym}\n\nQuestion:\n{question}\n\nOptions:\n{options}\n\nPlan:\n{plan}\n")

CSP_VERIFIER = (
    "Task: Please verify the solution to the following constraint optimization problem using a detailed method. "
    "The problem consists of a set of variables, each with a specific domain, and a set of constraints. Your "
    "task is to determine if the proposed solution in the \"Original execution\" correctly satisfies all the "
    "constraints, and if not, find a valid solution that does.\n"
    "Requirements:\n"
    "- Pay attention to the meaning of the domain, and interpret the direction of each value correctly; for "
    "instance, if the domain is 1 (cheapest) to 7 (most expensive), the second-cheapest item has value 2, not 6.\n"
    "- Review the domain, variables, constraints, and query for consistency. If the symbolic format disagrees "
    "with the natural language, change only the symbolic format; the natural language is the ground truth.\n"
    "- Keep iterating until you find the valid order that can accurately answer the question.\n"
    "- Make sure you fully understand the question before verification.\n"
    "End with the verified answer letter.\n\n"
    "{premises_sym}\n\nQuestion:\n{question}\n\nOptions:\n{options}\n\nOriginal Execution:\n{reasoning}\n")

NAIVE = ("Given a problem statement as contexts, the task is to answer a logical reasoning question. "
         "Reply with the correct option only.\n\n"
         "Context:\n{context}\n\nQuestion:\n{question}\n\nOptions:\n{options}\n")

COT = ("Given a problem statement as contexts, the task is to answer a logical reasoning question. "
       "Reason step by step, then state the correct option.\n\n"
       "Context:\n{context}\n\nQuestion:\n{question}\n\nOptions:\n{options}\n")

# ---------------------------------------------------------------------------
# Demos: bindings plus the expected output of every stage.

DEMOS = {
    "prontoqa": [
        dict(
            context="Each jompus is fruity. Every jompus is a wumpus. Every wumpus is not transparent. Wumpuses "
                    "are tumpuses. Tumpuses are mean. Tumpuses are vumpuses. Every vumpus is cold. Each vumpus "
                    "is a yumpus. Yumpuses are orange. Yumpuses are numpuses. Numpuses are dull. Each numpus is "
                    "a dumpus. Every dumpus is not shy. Impuses are shy. Dumpuses are rompuses. Each rompus is "
                    "liquid. Rompuses are zumpuses. Alex is a tumpus.",
            question="True or false: Alex is not shy.",
            translator="""Predicates:
Jompus($x, bool) ::: Does x belong to Jompuses?
Fruity($x, bool) ::: Is x fruity?
Wumpus($x, bool) ::: Does x belong to Wumpuses?
Transparent($x, bool) ::: Is x transparent?
Tumpus($x, bool) ::: Does x belong to Tumpuses?
Mean($x, bool) ::: Is x mean?
Vumpus($x, bool) ::: Does x belong to Vumpuses?
Cold($x, bool) ::: Is x cold?
Yumpus($x, bool) ::: Does x belong to Yumpuses?
Orange($x, bool) ::: Is x orange?
Numpus($x, bool) ::: Does x belong to Numpuses?
Dull($x, bool) ::: Is x dull?
Dumpus($x, bool) ::: Does x belong to Dumpuses?
Shy($x, bool) ::: Is x shy?
Impus($x, bool) ::: Does x belong to Impuses?
Rompus($x, bool) ::: Does x belong to Rompuses?
Liquid($x, bool) ::: Is x liquid?
Zumpus($x, bool) ::: Does x belong to Zumpuses?
Facts:
Tumpus(Alex, True) ::: Alex is a tumpus.
Rules:
Jompus($x, True) ⇒ Fruity($x, True) ::: Each jompus is fruity.
Jompus($x, True) ⇒ Wumpus($x, True) ::: Every jompus is a wumpus.
Wumpus($x, True) ⇒ Transparent($x, False) ::: Every wumpus is not transparent.
Wumpus($x, True) ⇒ Tumpus($x, True) ::: Wumpuses are tumpuses.
Tumpus($x, True) ⇒ Mean($x, True) ::: Tumpuses are mean.
Tumpus($x, True) ⇒ Vumpus($x, True) ::: Tumpuses are vumpuses.
Vumpus($x, True) ⇒ Cold($x, True) ::: Every vumpus is cold.
Vumpus($x, True) ⇒ Yumpus($x, True) ::: Each vumpus is a yumpus.
Yumpus($x, True) ⇒ Orange($x, True) ::: Yumpuses are orange.
Yumpus($x, True) ⇒ Numpus($x, True) ::: Yumpuses are numpuses.
Numpus($x, True) ⇒ Dull($x, True) ::: Numpuses are dull.
Numpus($x, True) ⇒ Dumpus($x, True) ::: Each numpus is a dumpus.
Dumpus($x, True) ⇒ Shy($x, False) ::: Every dumpus is not shy.
Impus($x, True) ⇒ Shy($x, True) ::: Impuses are shy.
Dumpus($x, True) ⇒ Rompus($x, True) ::: Dumpuses are rompuses.
Rompus($x, True) ⇒ Liquid($x, True) ::: Each rompus is liquid.
Rompus($x, True) ⇒ Zumpus($x, True) ::: Rompuses are zumpuses.
Query:
Shy(Alex, False) ::: Alex is not shy.
""",
            planner="""To determine whether the statement "Shy(Alex, False)" is true or false, we follow the rules from the known fact about Alex:
1. Identify the Goal: establish whether Alex is not shy (Shy(Alex, False)).
2. Utilize Facts about Alex: Tumpus(Alex, True) states that Alex belongs to Tumpuses.
3. Follow the membership chain with Modus Ponens: Tumpus → Vumpus → Yumpus → Numpus → Dumpus.
4. Apply the rule about Dumpuses and shyness to Alex.
5. Check that no rule derives Shy(Alex, True); the only such rule requires Impus(Alex, True), which is not derivable.
By following the plan, you can determine whether "Shy(Alex, False)" is true or false.
""",
            solver="""Let's execute the plan step by step, applying First-Order Logic inference rules.
1. Goal: determine whether Shy(Alex, False) is true.
2. Fact: Tumpus(Alex, True). Inference Rule: Given Fact.
3. Tumpus($x, True) ⇒ Vumpus($x, True). Inference Rule: Modus Ponens. So Vumpus(Alex, True).
4. Vumpus($x, True) ⇒ Yumpus($x, True). Inference Rule: Modus Ponens. So Yumpus(Alex, True).
5. Yumpus($x, True) ⇒ Numpus($x, True). Inference Rule: Modus Ponens. So Numpus(Alex, True).
6. Numpus($x, True) ⇒ Dumpus($x, True). Inference Rule: Modus Ponens. So Dumpus(Alex, True).
7. Dumpus($x, True) ⇒ Shy($x, False). Inference Rule: Modus Ponens. So Shy(Alex, False).
Thus, "Shy(Alex, False)" is true based on the logical deductions.
Final answer: {true}
""",
            verifier="""Context verification:
The facts, rules and query correctly correspond to the information in the original context and are semantically consistent.
Logical Process Verification:
1. Fact: Tumpus(Alex, True) is directly from the context with no invalid assumption.
2. Steps 3 to 6 apply Modus Ponens to rules stated in the context, each using the conclusion of the previous step.
3. Step 7 applies Modus Ponens to "Every dumpus is not shy", giving Shy(Alex, False).
Therefore, after verifying the translation between the original context and symbolic format, and the logical process, the original conclusion "Shy(Alex, False) is true" is valid and remains unchanged.
Final answer: {true}
""",
            cot="""Reasoning:
Alex is a tumpus. Tumpuses are vumpuses. So Alex is a vumpus.
Each vumpus is a yumpus. So Alex is a yumpus.
Yumpuses are numpuses. So Alex is a numpus.
Each numpus is a dumpus. So Alex is a dumpus.
Every dumpus is not shy. So Alex is not shy.
The correct option is: A)
""",
            naive="The correct option is: A)\n",
        ),
        dict(
            context="Every wumpus is a rompus. Rompuses are not bright. Each zumpus is bright. Rompuses are "
                    "vumpuses. Sally is a wumpus.",
            question="True or false: Sally is bright.",
            translator="""Predicates:
Wumpus($x, bool) ::: Does x belong to Wumpuses?
Rompus($x, bool) ::: Does x belong to Rompuses?
Bright($x, bool) ::: Is x bright?
Zumpus($x, bool) ::: Does x belong to Zumpuses?
Vumpus($x, bool) ::: Does x belong to Vumpuses?
Facts:
Wumpus(Sally, True) ::: Sally is a wumpus.
Rules:
Wumpus($x, True) ⇒ Rompus($x, True) ::: Every wumpus is a rompus.
Rompus($x, True) ⇒ Bright($x, False) ::: Rompuses are not bright.
Zumpus($x, True) ⇒ Bright($x, True) ::: Each zumpus is bright.
Rompus($x, True) ⇒ Vumpus($x, True) ::: Rompuses are vumpuses.
Query:
Bright(Sally, True) ::: Sally is bright.
""",
            planner="""1. Identify the Goal: establish whether Sally is bright (Bright(Sally, True)).
2. Start from the fact Wumpus(Sally, True).
3. Use Modus Ponens with the Wumpus rule to show Sally is a rompus.
4. Apply the Rompus rule about brightness to Sally.
5. Compare the derived literal with the query.
""",
            solver="""1. Fact: Wumpus(Sally, True). Inference Rule: Given Fact.
2. Wumpus($x, True) ⇒ Rompus($x, True). Inference Rule: Modus Ponens. So Rompus(Sally, True).
3. Rompus($x, True) ⇒ Bright($x, False). Inference Rule: Modus Ponens. So Bright(Sally, False).
4. Bright(Sally, False) contradicts the query Bright(Sally, True).
Thus, "Bright(Sally, True)" is false.
Final answer: {false}
""",
            verifier="""Context verification:
The facts, rules and query correctly correspond to the original context.
Logical Process Verification:
1. Wumpus(Sally, True) is given.
2. Both Modus Ponens steps use rules stated in the context.
3. No rule makes Sally a zumpus, so Bright(Sally, True) cannot be derived, while Bright(Sally, False) is derived.
The original conclusion is valid and remains unchanged.
Final answer: {false}
""",
            cot="""Reasoning:
Sally is a wumpus. Every wumpus is a rompus. So Sally is a rompus.
Rompuses are not bright. So Sally is not bright.
The correct option is: B)
""",
            naive="The correct option is: B)\n",
        ),
    ],
    "proofwriter": [
        dict(
            context="Bob is big. Bob is kind. If someone is big then they are strong. If someone is strong and "
                    "kind then they are smart.",
            question="Based on the above information, is the following statement true, false, or unknown? Bob is smart.",
            translator="""Predicates:
Big($x, bool) ::: Is x big?
Kind($x, bool) ::: Is x kind?
Strong($x, bool) ::: Is x strong?
Smart($x, bool) ::: Is x smart?
Facts:
Big(Bob, True) ::: Bob is big.
Kind(Bob, True) ::: Bob is kind.
Rules:
Big($x, True) ⇒ Strong($x, True) ::: If someone is big then they are strong.
Strong($x, True) ∧ Kind($x, True) ⇒ Smart($x, True) ::: If someone is strong and kind then they are smart.
Query:
Smart(Bob, True) ::: Bob is smart.
""",
            planner="""1. Identify the Goal: determine whether Smart(Bob, True) holds.
2. Use Big(Bob, True) with the first rule to infer whether Bob is strong.
3. Combine Strong(Bob, True) and Kind(Bob, True) by Conjunction.
4. Apply the second rule with Modus Ponens to reach the query.
""",
            solver="""1. Fact: Big(Bob, True). Inference Rule: Given Fact.
2. Big($x, True) ⇒ Strong($x, True). Inference Rule: Modus Ponens. So Strong(Bob, True).
3. Fact: Kind(Bob, True). Inference Rule: Conjunction gives Strong(Bob, True) ∧ Kind(Bob, True).
4. Strong($x, True) ∧ Kind($x, True) ⇒ Smart($x, True). Inference Rule: Modus Ponens. So Smart(Bob, True).
Thus, the statement "Smart(Bob, True)" is true.
Final answer: {true}
""",
            verifier="""Context verification:
The translation is consistent with the context.
Logical Process Verification:
1. Big(Bob, True) and Kind(Bob, True) are given facts.
2. Each Modus Ponens step instantiates a rule from the context with $x = Bob.
The conclusion that "Smart(Bob, True)" is true is valid and remains unchanged.
Final answer: {true}
""",
            cot="""Reasoning:
Bob is big. If someone is big then they are strong. So Bob is strong.
Bob is strong and kind. If someone is strong and kind then they are smart. So Bob is smart.
The correct option is: A)
""",
            naive="The correct option is: A)\n",
        ),
        dict(
            context="The bear is red. The mouse is not cold. If something is red then it is not cold. If "
                    "something is cold then it is round.",
            question="Based on the above information, is the following statement true, false, or unknown? The bear is round.",
            translator="""Predicates:
Red($x, bool) ::: Is x red?
Cold($x, bool) ::: Is x cold?
Round($x, bool) ::: Is x round?
Facts:
Red(bear, True) ::: The bear is red.
Cold(mouse, False) ::: The mouse is not cold.
Rules:
Red($x, True) ⇒ Cold($x, False) ::: If something is red then it is not cold.
Cold($x, True) ⇒ Round($x, True) ::: If something is cold then it is round.
Query:
Round(bear, True) ::: The bear is round.
""",
            planner="""1. Identify the Goal: determine whether Round(bear, True) holds.
2. Derive what follows about the bear from Red(bear, True).
3. Check whether any rule concludes Round or its negation for the bear.
4. If neither can be derived, the statement is unknown.
""",
            solver="""1. Fact: Red(bear, True). Inference Rule: Given Fact.
2. Red($x, True) ⇒ Cold($x, False). Inference Rule: Modus Ponens. So Cold(bear, False).
3. The only rule concluding Round requires Cold(bear, True), which contradicts step 2, so it cannot fire.
4. No rule concludes Round(bear, False) either.
Thus, the truth of "Round(bear, True)" cannot be determined and the answer is unknown.
Final answer: {unknown}
""",
            verifier="""Context verification:
The translation is consistent with the context.
Logical Process Verification:
1. Cold(bear, False) follows by Modus Ponens.
2. Denying the antecedent of the Cold rule does not establish that the bear is not round, so the solver correctly avoided that invalid inference.
The conclusion that "Round(bear, True)" remains unknown is consistent with the premises.
Final answer: {unknown}
""",
            cot="""Reasoning:
The bear is red. If something is red then it is not cold. So the bear is not cold.
Only cold things are known to be round, and nothing says whether things that are not cold are round.
The correct option is: C)
""",
            naive="The correct option is: C)\n",
        ),
    ],
    "folio": [
        dict(
            context="Books contain tons of knowledge. When a person reads a book, that person gains knowledge. "
                    "If a person gains knowledge, they become smarter. Harry read the book \"Walden\" by Henry Thoreau.",
            question="Based on the above information, is the following statement true, false, or uncertain? Harry is smarter than before.",
            translator="""Predicates:
Book(x) ::: x is a book.
Contains(x, y) ::: x contains y.
Person(x) ::: x is a person.
Reads(x, y) ::: x reads y.
Gains(x, y) ::: x gains y.
Smarter(x) ::: x becomes smarter.
Premises:
∀x (Book(x) → Contains(x, knowledge)) ::: Books contain tons of knowledge.
∀x ∀y (Person(x) ∧ Reads(x, y) ∧ Book(y) → Gains(x, knowledge)) ::: When a person reads a book, that person gains knowledge.
∀x (Person(x) ∧ Gains(x, knowledge) → Smarter(x)) ::: If a person gains knowledge, they become smarter.
Person(harry) ∧ Reads(harry, walden) ∧ Book(walden) ::: Harry read the book "Walden" by Henry Thoreau.
Query:
Smarter(harry) ::: Harry is smarter than before.
""",
            planner="""1. Identify the Goal: determine whether Smarter(harry) follows from the premises.
2. Use Simplification on the premise about Harry to obtain Person(harry), Reads(harry, walden) and Book(walden).
3. Apply Universal Instantiation and Modus Ponens to the reading premise to obtain Gains(harry, knowledge).
4. Apply Universal Instantiation and Modus Ponens to the knowledge premise to reach Smarter(harry).
""",
            solver="""1. Premise: Person(harry) ∧ Reads(harry, walden) ∧ Book(walden). Inference Rule: Simplification gives each conjunct.
2. Premise: ∀x ∀y (Person(x) ∧ Reads(x, y) ∧ Book(y) → Gains(x, knowledge)). Inference Rule: Universal Instantiation with x = harry, y = walden, then Modus Ponens. So Gains(harry, knowledge).
3. Premise: ∀x (Person(x) ∧ Gains(x, knowledge) → Smarter(x)). Inference Rule: Universal Instantiation with x = harry, then Modus Ponens. So Smarter(harry).
Thus, the statement "Smarter(harry)" is true.
Final answer: {true}
""",
            verifier="""Context verification:
Each premise matches its sentence; reading "the book Walden" supplies Book(walden).
Logical Process Verification:
1. Simplification and both Universal Instantiation steps are valid.
2. Both Modus Ponens steps have all antecedents established.
The answer is verified to be true.
Final answer: {true}
""",
            cot="""Reasoning:
Harry read Walden, which is a book. When a person reads a book, that person gains knowledge, so Harry gained knowledge.
If a person gains knowledge, they become smarter. So Harry is smarter than before.
The correct option is: A)
""",
            naive="The correct option is: A)\n",
        ),
        dict(
            context="All dogs are mammals. No mammals are reptiles. Rex is a dog.",
            question="Based on the above information, is the following statement true, false, or uncertain? Rex is a reptile.",
            translator="""Predicates:
Dog(x) ::: x is a dog.
Mammal(x) ::: x is a mammal.
Reptile(x) ::: x is a reptile.
Premises:
∀x (Dog(x) → Mammal(x)) ::: All dogs are mammals.
∀x (Mammal(x) → ¬Reptile(x)) ::: No mammals are reptiles.
Dog(rex) ::: Rex is a dog.
Query:
Reptile(rex) ::: Rex is a reptile.
""",
            planner="""1. Identify the Goal: determine whether Reptile(rex) holds.
2. Apply Universal Instantiation and Modus Ponens to show Rex is a mammal.
3. Apply the second premise to derive ¬Reptile(rex).
4. Compare with the query.
""",
            solver="""1. Premise: Dog(rex). Inference Rule: Given.
2. ∀x (Dog(x) → Mammal(x)). Inference Rule: Universal Instantiation and Modus Ponens. So Mammal(rex).
3. ∀x (Mammal(x) → ¬Reptile(x)). Inference Rule: Universal Instantiation and Modus Ponens. So ¬Reptile(rex).
4. ¬Reptile(rex) contradicts Reptile(rex).
Thus, the statement "Reptile(rex)" is false.
Final answer: {false}
""",
            verifier="""Context verification:
The premises and query are faithful to the context.
Logical Process Verification:
Both inference steps are valid Modus Ponens applications after Universal Instantiation.
The answer is verified to be false.
Final answer: {false}
""",
            cot="""Reasoning:
Rex is a dog, and all dogs are mammals, so Rex is a mammal. No mammals are reptiles, so Rex is not a reptile.
The correct option is: B)
""",
            naive="The correct option is: B)\n",
        ),
    ],
    "logicaldeduction": [
        dict(
            context="The following paragraphs each describe a set of three objects arranged in a fixed order. The "
                    "statements are logically consistent within each paragraph. On a shelf, there are three books: "
                    "a red book, a green book, and a blue book. The blue book is to the right of the green book. "
                    "The red book is the rightmost.",
            question="Which of the following is true?",
            options="A) The red book is the leftmost.\nB) The green book is the leftmost.\nC) The blue book is the leftmost.",
            translator="""Domain:
1: leftmost
3: rightmost
Variables:
red_book ∈ {1, 2, 3}
green_book ∈ {1, 2, 3}
blue_book ∈ {1, 2, 3}
Constraints:
blue_book > green_book ::: The blue book is to the right of the green book.
red_book == 3 ::: The red book is the rightmost.
AllDifferentConstraint([red_book, green_book, blue_book]) ::: All books have different positions.
Query:
A) red_book == 1 ::: The red book is the leftmost.
B) green_book == 1 ::: The green book is the leftmost.
C) blue_book == 1 ::: The blue book is the leftmost.
""",
            planner="""1. Understand the domain: positions 1 (leftmost) to 3 (rightmost).
2. Fix the red book at position 3.
3. Place the remaining two books so the blue book is to the right of the green book.
4. Check each option against the resulting order and choose the one that holds.
""",
            solver="""1. red_book == 3 fixes the red book at the rightmost position.
2. The green and blue books occupy positions 1 and 2, and blue_book > green_book, so green_book = 1 and blue_book = 2.
3. Example: green_book = 1, blue_book = 2, red_book = 3 satisfies all constraints.
4. Option A: red_book == 1 is false. Option B: green_book == 1 is true. Option C: blue_book == 1 is false.
Therefore, the final answer is B.
""",
            verifier="""Verification of the translation and the Original Execution:
The domain direction (1 = leftmost) matches "to the right of" as a larger value.
The order green (1), blue (2), red (3) satisfies every constraint and is the only one.
Only option B holds in it. Therefore, the original answer B remains unchanged.
""",
            cot="""Reasoning:
The red book is the rightmost. The blue book is to the right of the green book, so the green book is the leftmost and the blue book is in the middle.
The correct option is: B)
""",
            naive="The correct option is: B)\n",
        ),
        dict(
            context="The following paragraphs each describe a set of three objects arranged in a fixed order. The "
                    "statements are logically consistent within each paragraph. In a golf tournament, there were "
                    "three golfers: Ana, Eli, and Joe. Eli finished above Ana. Joe finished last.",
            question="Which of the following is true?",
            options="A) Eli finished first.\nB) Ana finished first.\nC) Joe finished first.",
            translator="""Domain:
1: first
3: last
Variables:
ana ∈ {1, 2, 3}
eli ∈ {1, 2, 3}
joe ∈ {1, 2, 3}
Constraints:
eli < ana ::: Eli finished above Ana.
joe == 3 ::: Joe finished last.
AllDifferentConstraint([ana, eli, joe]) ::: All golfers have different ranks.
Query:
A) eli == 1 ::: Eli finished first.
B) ana == 1 ::: Ana finished first.
C) joe == 1 ::: Joe finished first.
""",
            planner="""1. Understand the domain: 1 is first place and 3 is last place, so finishing above means a smaller value.
2. Fix Joe at 3.
3. Order Ana and Eli in positions 1 and 2 using eli < ana.
4. Evaluate each option against the order.
""",
            solver="""1. joe == 3 places Joe last.
2. Ana and Eli take positions 1 and 2 with eli < ana, so eli = 1 and ana = 2.
3. Example: eli = 1, ana = 2, joe = 3 satisfies all constraints.
4. Option A: eli == 1 is true. Options B and C are false.
Therefore, the final answer is A.
""",
            verifier="""Verification of the translation and the Original Execution:
"Finished above" correctly maps to a smaller value because 1 means first.
The unique order Eli (1), Ana (2), Joe (3) satisfies all constraints, and only option A holds.
Therefore, the original answer A remains unchanged.
""",
            cot="""Reasoning:
Joe finished last. Eli finished above Ana, so Eli finished first and Ana second.
The correct option is: A)
""",
            naive="The correct option is: A)\n",
        ),
    ],
    "arlsat": [
        dict(
            context="Three speakers—Kim, Lee, and Mo—will each give one talk in one of three consecutive time "
                    "slots, numbered 1 through 3, one talk per slot. Lee speaks earlier than Kim. Mo does not "
                    "speak in slot 1.",
            question="Which one of the following must be true?",
            options="A) Lee speaks in slot 1.\nB) Kim speaks in slot 3.\nC) Mo speaks in slot 2.\n"
                    "D) Kim speaks in slot 2.\nE) Mo speaks in slot 3.",
            translator="""Domain:
1: first slot
3: last slot
Variables:
kim ∈ {1, 2, 3}
lee ∈ {1, 2, 3}
mo ∈ {1, 2, 3}
Constraints:
AllDifferentConstraint([kim, lee, mo]) ::: One talk per slot.
lee < kim ::: Lee speaks earlier than Kim.
mo != 1 ::: Mo does not speak in slot 1.
Query:
A) lee == 1 ::: Lee speaks in slot 1.
B) kim == 3 ::: Kim speaks in slot 3.
C) mo == 2 ::: Mo speaks in slot 2.
D) kim == 2 ::: Kim speaks in slot 2.
E) mo == 3 ::: Mo speaks in slot 3.
""",
            planner="""1. Understand the domain and variables: three speakers in slots 1 to 3.
2. Apply the constraints: Mo is not first, and Lee precedes Kim.
3. Enumerate all schedules satisfying the constraints.
4. For each option, test whether it holds in every schedule; the option that must be true holds in all of them.
""",
            solver="""1. Mo is in slot 2 or 3, so slot 1 belongs to Lee or Kim. Since Lee speaks earlier than Kim, Kim cannot be first, so Lee is in slot 1.
2. Valid schedules: (lee 1, mo 2, kim 3) and (lee 1, kim 2, mo 3).
3. Option A holds in both schedules. Options B, C, D and E each fail in one schedule.
Therefore, the final answer is A.
""",
            verifier="""Verification of the translation and the Original Execution:
The constraints match the context. Both schedules listed satisfy all constraints and no other schedule does.
Only option A holds in every schedule. Thus, the answer A should remain unchanged.
""",
            cot="""Reasoning:
Mo cannot speak first, and Kim cannot speak first because Lee speaks earlier than Kim. So Lee speaks first.
The correct option is: A)
""",
            naive="The correct option is: A)\n",
        ),
        dict(
            context="Three crates—a, b, and c—are loaded onto two trucks, truck 1 and truck 2. Each crate is "
                    "loaded onto exactly one truck. Crate a and crate b are loaded onto different trucks. Crate c "
                    "is loaded onto truck 2.",
            question="Which one of the following could be true?",
            options="A) Crates a and b are both on truck 1.\nB) Crate c is on truck 1.\n"
                    "C) All three crates are on truck 2.\nD) Crate a is on truck 2.\n"
                    "E) Crates b and c are both on truck 1.",
            translator="""Domain:
1: the first truck
2: the second truck
Variables:
crate_a ∈ {1, 2}
crate_b ∈ {1, 2}
crate_c ∈ {1, 2}
Constraints:
crate_a != crate_b ::: Crate a and crate b are loaded onto different trucks.
crate_c == 2 ::: Crate c is loaded onto truck 2.
Query:
A) crate_a == 1 and crate_b == 1 ::: Crates a and b are both on truck 1.
B) crate_c == 1 ::: Crate c is on truck 1.
C) crate_a == 2 and crate_b == 2 and crate_c == 2 ::: All three crates are on truck 2.
D) crate_a == 2 ::: Crate a is on truck 2.
E) crate_b == 1 and crate_c == 1 ::: Crates b and c are both on truck 1.
""",
            planner="""1. Understand the domain: each crate takes value 1 or 2 for its truck.
2. Apply the constraints: a and b differ, c is on truck 2.
3. Enumerate the loadings that satisfy the constraints.
4. An option could be true if at least one loading satisfies it.
""",
            solver="""1. crate_c = 2, and crate_a and crate_b take different trucks.
2. Valid loadings: (a 1, b 2, c 2) and (a 2, b 1, c 2).
3. Option A contradicts crate_a != crate_b. Options B and E contradict crate_c == 2. Option C contradicts crate_a != crate_b. Option D holds in the loading (a 2, b 1, c 2).
Therefore, the final answer is D.
""",
            verifier="""Verification of the translation and the Original Execution:
The translation matches the context, and both loadings are valid.
Only option D is satisfied by some loading. Thus, the answer D should remain unchanged.
""",
            cot="""Reasoning:
Crate c is on truck 2, so B and E are impossible. Crates a and b are on different trucks, so A and C are impossible. Crate a can be on truck 2 with crate b on truck 1.
The correct option is: D)
""",
            naive="The correct option is: D)\n",
        ),
    ],
}

FAMILIES = ["prontoqa", "proofwriter", "folio", "logicaldeduction", "arlsat"]
STAGES = ["translator", "planner", "solver", "verifier", "naive", "cot"]


def template_for(family, stage):
    fol = family in ("prontoqa", "proofwriter", "folio")
    if stage == "naive":
        return NAIVE
    if stage == "cot":
        return COT
    if fol:
        return {"translator": fol_translator, "planner": fol_planner, "solver": fol_solver,
                "verifier": fol_verifier}[stage](family)
    return {"translator": CSP_TRANSLATOR, "planner": CSP_PLANNER, "solver": CSP_SOLVER,
            "verifier": CSP_VERIFIER}[stage]


def bindings_for(family, demo):
    fol = family in ("prontoqa", "proofwriter", "folio")
    return {
        "context": demo["context"],
        "question": demo["question"],
        "options": fol_options(family) if fol else demo["options"],
        "premises_sym": demo["translator"].rstrip("\n"),
        "plan": demo["planner"].rstrip("\n"),
        "reasoning": demo["solver"].rstrip("\n"),
    }


def main():
    for family in FAMILIES:
        (OUT / family).mkdir(parents=True, exist_ok=True)
        for stage in STAGES:
            template = template_for(family, stage)
            parts = ["=== template ===\n", template]
            for demo in DEMOS[family]:
                parts += ["=== demo input ===\n", render(template, bindings_for(family, demo)),
                          "=== demo output ===\n", demo[stage]]
            (OUT / family / f"{stage}.txt").write_text("".join(parts), encoding="utf-8")


if __name__ == "__main__":
    main()
