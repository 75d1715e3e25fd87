#!/usr/bin/env python3
"""Regenerate the bundled verb/object template bank.

The bank pairs verbs with semantically compatible objects via object
categories.  Counts are pinned: 27 verbs, 184 objects, 1968 verb/object
pairs.  Output files land in src/embias/data/wordsets/.
"""

from pathlib import Path

OBJECTS = {
    "food": [
        "a meal", "a sandwich", "a salad", "a pizza", "a burger",
        "a steak", "a stew", "a curry", "a casserole", "an omelet",
        "a taco", "a burrito", "a quiche", "a lasagna", "a risotto",
        "a pasta dish", "a pot roast", "a meatloaf", "a chowder", "a kebab",
        "an apple", "an orange", "a banana", "a peach", "a pear",
        "a plum", "a mango", "a melon", "a grapefruit", "an apricot",
        "a strawberry", "a pineapple", "a coconut", "a kiwi", "a fig",
        "a tomato", "a carrot", "a cucumber", "a pepper", "a potato",
        "an onion", "a pumpkin", "a squash", "an eggplant", "a radish",
        "a turnip", "a cabbage", "a zucchini", "an artichoke", "a mushroom",
        "a cake", "a pie", "a muffin", "a bagel", "a pancake",
        "a waffle", "a cookie", "a brownie", "a croissant", "a pastry",
    ],
    "drink": [
        "a coffee", "a tea", "a latte", "an espresso", "a cappuccino",
        "a hot chocolate", "a smoothie", "a milkshake", "a lemonade",
        "a soda", "a juice", "an iced tea", "a cider", "a punch",
        "a cocoa", "a beverage",
    ],
    "clothing": [
        "a shirt", "a jacket", "a coat", "a sweater", "a scarf",
        "a hat", "a dress", "a skirt", "a blouse", "a tie",
        "a suit", "a uniform", "a vest", "a cardigan", "a hoodie",
        "a raincoat", "a poncho", "a glove", "a mitten", "a sock",
        "a shoe", "a boot", "a sandal", "a slipper", "a belt",
        "a cap", "a beanie", "a jersey", "a robe", "a gown",
        "a blazer", "a parka", "a tunic",
    ],
    "vehicle": [
        "a car", "a truck", "a van", "a bus", "a motorcycle",
        "a scooter", "a bicycle", "a tractor", "a jeep", "a minivan",
        "a convertible", "a taxi",
    ],
    "reading": [
        "a book", "a novel", "a magazine", "a newspaper", "a journal",
        "a letter", "a poem", "an essay", "a report", "a memo",
        "a pamphlet", "a brochure", "a manual", "a textbook", "a comic",
        "a dictionary", "an article", "a biography", "a screenplay",
        "a thesis", "a recipe", "a story",
    ],
    "instrument": [
        "a guitar", "a piano", "a violin", "a drum", "a flute",
        "a trumpet", "a cello", "a harp", "a banjo", "a clarinet",
        "a saxophone", "a trombone", "a ukulele", "an accordion",
    ],
    "household": [
        "a blender", "a toaster", "a kettle", "a microwave",
        "a refrigerator", "a dishwasher", "an oven", "a vacuum",
        "a fan", "a heater",
    ],
    "tool": [
        "a hammer", "a wrench", "a screwdriver", "a drill", "a saw",
        "a ladder", "a shovel", "a rake", "a lawnmower", "a toolbox",
        "a flashlight", "a crowbar",
    ],
    "furniture": [
        "a table", "a chair", "a desk", "a sofa", "a bookshelf",
    ],
}

ALL = list(OBJECTS)

VERBS = [
    ("ate", ["food"]),
    ("cooked", ["food"]),
    ("prepared", ["food"]),
    ("tasted", ["food", "drink"]),
    ("ordered", ["food", "drink"]),
    ("served", ["food", "drink"]),
    ("drank", ["drink"]),
    ("poured", ["drink"]),
    ("wore", ["clothing"]),
    ("folded", ["clothing"]),
    ("washed", ["clothing", "vehicle", "household"]),
    ("drove", ["vehicle"]),
    ("parked", ["vehicle"]),
    ("read", ["reading"]),
    ("wrote", ["reading"]),
    ("studied", ["reading"]),
    ("played", ["instrument"]),
    ("cleaned", ["clothing", "vehicle", "household", "furniture"]),
    ("repaired", ["vehicle", "tool", "furniture", "household", "instrument"]),
    ("bought", ALL),
    ("sold", ALL),
    ("borrowed", ALL),
    ("rented", ["vehicle", "tool", "furniture", "instrument"]),
    ("carried", ["food", "drink", "clothing", "reading", "instrument", "tool"]),
    ("held", ["food", "drink", "clothing", "reading", "instrument", "tool"]),
    ("lost", ["clothing", "reading", "instrument", "tool", "drink"]),
    ("found", ALL),
]


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src" / "embias" / "data" / "wordsets"
    out.mkdir(parents=True, exist_ok=True)

    objects = [o for cat in OBJECTS.values() for o in cat]
    assert len(objects) == len(set(objects)) == 184, len(objects)
    assert len(VERBS) == 27

    pairs = []
    for verb, cats in VERBS:
        for cat in cats:
            pairs.extend((verb, obj) for obj in OBJECTS[cat])
    assert len(pairs) == len(set(pairs)) == 1968, len(pairs)

    (out / "verbs.txt").write_text(
        "# Verbs for premise templates (one per line).\n"
        + "\n".join(v for v, _ in VERBS) + "\n"
    )
    (out / "objects.txt").write_text(
        "# Objects for premise templates, article included (one per line).\n"
        + "\n".join(objects) + "\n"
    )
    (out / "verb_object_pairs.txt").write_text(
        "# Allowed verb/object pairings, one tab-separated pair per line.\n"
        + "\n".join(f"{v}\t{o}" for v, o in pairs) + "\n"
    )
    print(f"wrote {len(VERBS)} verbs, {len(objects)} objects, {len(pairs)} pairs -> {out}")


if __name__ == "__main__":
    main()
