"""Synthetic frame-classification corpus built from per-class templates."""

import random

from .evaluate import FrameExample

NAMES = ["John", "Mary", "Robert", "Sara", "Tom", "Lisa", "Ben", "Anna",
         "Jason", "Emma", "Sam", "Kate"]
OBJECTS = ["books", "apples", "marbles", "stickers", "pencils", "cards",
           "balloons", "cookies", "coins", "shells", "crayons", "toys"]
PLACES = ["park", "shelf", "garden", "kitchen", "classroom", "yard"]

TEMPLATES = {
    "possess": ["{a} had {n} {obj}.",
                "{a} owned {n} {obj}.",
                "{a} kept {n} {obj} at home."],
    "exist": ["There were {n} {obj} in the {place}.",
              "{n} {obj} existed in the {place}."],
    "measure": ["The rope measured {n} inches.",
                "The plank measured {n} feet in the {place}."],
    "cost_state": ["The {obj} cost {n} dollars.",
                   "Each of the {obj} cost {n} cents."],
    "contain": ["The box contained {n} {obj}.",
                "The jar contained {n} {obj} in the {place}."],
    "remain": ["{n} {obj} remained on the shelf.",
               "Only {n} {obj} remained in the {place}."],
    "transfer_goods": ["{a} gave {b} {n} {obj}.",
                       "{a} handed {b} {n} {obj}."],
    "acquire": ["{a} found {n} {obj}.",
                "{a} received {n} {obj} from a friend."],
    "lose": ["{a} lost {n} {obj}.",
             "{a} misplaced {n} {obj} in the {place}."],
    "create": ["{a} made {n} {obj}.",
               "{a} built {n} {obj} in the {place}."],
    "consume": ["{a} ate {n} {obj}.",
                "{a} drank {n} glasses of juice."],
    "destroy": ["{a} broke {n} {obj}.",
                "{a} destroyed {n} {obj} by accident."],
    "combine": ["{a} combined the {obj} into one pile.",
                "{a} merged {n} piles of {obj}."],
    "separate": ["{a} separated the {obj} into {n} piles.",
                 "{a} sorted the {obj} apart into {n} heaps."],
    "multiply_groups": ["{a} multiplied the {obj} by {n}.",
                        "{a} tripled the rows of {obj}."],
    "divide_equally": ["{a} divided the {obj} among {n} friends.",
                       "{a} shared the {obj} equally between {n} classmates."],
    "earn": ["{a} earned {n} dollars.",
             "{a} earned {n} dollars washing cars."],
    "spend": ["{a} spent {n} dollars.",
              "{a} spent {n} dollars on snacks."],
    "buy": ["{a} bought {n} {obj}.",
            "{a} purchased {n} {obj} at the store."],
    "sell": ["{a} sold {b} {n} {obj}.",
             "{a} sold {n} {obj} at the fair."],
    "compare_more": ["{a} has {n} more {obj} than {b}.",
                     "{a} holds {n} more {obj} than {b} does."],
    "compare_less": ["{a} has {n} fewer {obj} than {b}.",
                     "{a} holds {n} fewer {obj} than {b} does."],
}


def generate_corpus(per_class=20, seed=0):
    """Deterministic labeled sentences, per_class per frame type."""
    rng = random.Random(seed)
    examples = []
    for label in sorted(TEMPLATES):
        templates = TEMPLATES[label]
        for k in range(per_class):
            template = templates[k % len(templates)]
            a, b = rng.sample(NAMES, 2)
            text = template.format(
                a=a, b=b,
                n=rng.randint(2, 99),
                obj=rng.choice(OBJECTS),
                place=rng.choice(PLACES))
            examples.append(FrameExample(text=text, label=label))
    return examples
