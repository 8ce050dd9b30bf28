#!/usr/bin/env python3
"""Regenerate tests/fixtures/porter_reference.txt.

The fixture is a frozen word -> stem table produced by the independent
reference-C transliteration (scripts/porter_refc.py). The production
stemmer must agree on every entry. Run from the repository root:

    python scripts/make_porter_fixture.py
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent
sys.path.insert(0, str(HERE))
sys.path.insert(0, str(ROOT / "src"))

from porter_refc import stem as ref_stem  # noqa: E402

# Hand-picked coverage: plurals, -ed/-ing, y->i, every step-2/3/4 suffix,
# double consonants, cvc endings, short words, and common corpus words.
CURATED = """
a i am an as at be by do go he if in is it me my no of on or so to up us we
act add age ago aid aim air all and any are arm art ask bad bag bar bed best
big bit box boy bus but buy can car cat city cold come cool cost crowd cup
dark day days deep did dog door down dry early easy eat end evening face fact
fall fast feel feet fell felt few find fine fire five flat food foot four
free full fun game gave get girl give good got great green grow hand happy
happiness happier happiest hard has hat have head hear heart heavy held help
here high hill his hold home hope hot hour house how hundred ice idea ill
into iron job join jump just keep kept key kind knew know land large last
late laugh lazy lead left less let life light like line list little live
long look lost lot loud love low made make man many map may mean meet men
mile milk mind mine miss moment money month moon more morning most move much
must name near need never new next nice night nine noise noon north nose not
note now number old once one only open our out over own page paper part pass
past pay people photo pick place plan play point poor press pretty pull push
put quick quiet rain ran reach read ready real red rest rich ride right ring
rise road rock room round run sad sat saw say sea seat see seem seen sell
send sent seven shall shape sharp ship shoe shop short show side sign since
sing sit six size sky sleep slow small smile snow some song soon sound south
space speak spell spend spoke sport spring stand star start stay step still
stone stop store story street strong such summer sun sure table take talk
tall tea team tell ten test than that the their them then there these they
thing think third this those three time tiny today told took top town train
tree trip true try turn two under until use very visit voice wait walk want
warm was watch water way week well went were what when where which while
white who why wide wife will win wind winter wish with word work world would
write year yes yet young your
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
succeed succeeding plaster supplies supplied cries cried crying flies flying
died dies dying lied lying tied tries tried studied studies studying
happy happiness happily unhappiness sky spy cry dry fry shy why try
relational conditional rational valenci hesitanci digitizer conformabli
radicalli differentli vileli analogousli vietnamization predication operator
feudalism decisiveness hopefulness callousness formaliti sensitiviti
sensibiliti triplicate formative formalize electriciti electrical hopeful
goodness revival allowance inference airliner gyroscopic adjustable
defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize
generalizations oscillators probate rate cease controll roll control rolled
controlling controlled archaeology geology theology analogical apology
crumbly wobbly trembly assembly bubbly knobbly nobly feebly pebbly
logical illogical logic logistic biology biologist ecology ecological
abilities ability agencies agency bodies body carries carried carrying
cities copied copies easily eating eaten elements engineering
enjoy enjoys enjoyed enjoying annoy annoyance employ employment destroy
relative relatively motivation innovation renovation probation vibration
national international operational organization organizational realization
realise realize realized realizing recognise recognize recognized
singular singularity regular regularity popular popularity electricity
felicity publicity simplicity duplicity complicity
happenstance circumstance instance substance performance appearance
absence presence silence violence evidence residence confidence
beautiful careful wonderful powerful useful useless carefully
kindness darkness weakness illness business witness harness
motor motored motoring doting dotted dote denote devote devoted
refer referred referring prefer preferred occur occurred occurring
commit committed committing permit permitted admitting
travel travelled travelling traveling traveled
label labelled labeled labelling labeling
skies skiing ski sky dying die lying lie tying tie
agree agrees agreeing disagree disagreed guarantee guaranteed
free freed freeing three threes see sees seeing saw sawing
bee bees knee knees tree trees flee fleed fleeing
feudally medically radically classically basically
"""

AFFECT = """
afraid fear fearful fearing feared scared scare scaring scares terror
terrors terrified terrify terrifying panic panicked panicking anxious
anxiety worry worried worries worrying dread dreaded dreading horror
horrors horrified fright frightened frightening nervous nervously alarm
alarmed alarming alarms timid uneasy apprehensive phobia phobias
sad sadder saddest sadness unhappy unhappiness misery miserable sorrow
sorrows sorrowful grief grieve grieving grieved gloom gloomy depressed
depressing depression despair despairing cry cries cried crying tears
tearful mourn mourned mourning heartbroken melancholy lonely loneliness
regret regrets regretted regretting hopeless hopelessly downcast weep
weeping wept
joy joys joyful joyfully joyous happy happier happiest happiness cheerful
cheerfully cheer cheers cheered cheering delight delighted delightful
delighting glad gladly gladness smile smiles smiled smiling laugh laughs
laughed laughing laughter love loves loved loving lovely wonderful
wonderfully excited exciting excitement fun funny enjoy enjoys enjoyed
enjoying enjoyment pleased pleasing pleasure bliss blissful merry
thrilled thrilling elated elation
angry anger angers angered angering angrily rage rages raged raging
furious furiously fury mad madden maddening annoyed annoying annoyance
irritated irritating irritation hate hates hated hating hatred outrage
outraged outrageous resent resented resentful resentment hostile
hostility bitter bitterly bitterness frustrated frustrating frustration
livid cross fuming wrath indignant indignantly
clock clocks clocked clocking alarming
"""

SUFFIXES = [
    "s", "es", "ies", "sses", "ed", "eed", "ing", "y", "ational", "tional",
    "enci", "anci", "izer", "bli", "abli", "alli", "entli", "eli", "ousli",
    "ization", "ation", "ator", "alism", "iveness", "fulness", "ousness",
    "aliti", "iviti", "biliti", "logi", "icate", "ative", "alize", "iciti",
    "ical", "ful", "ness", "al", "ance", "ence", "er", "ic", "able", "ible",
    "ant", "ement", "ment", "ent", "sion", "tion", "ou", "ism", "ate", "iti",
    "ous", "ive", "ize", "e", "ll", "bb", "dd", "tt", "zz", "ss",
]

ROOTS = [
    "b", "c", "d", "f", "g", "h", "j", "k", "l", "m", "n", "p", "r", "s",
    "t", "v", "w", "x", "y", "z", "con", "per", "re", "de", "in", "un",
    "pro", "dis", "gen", "mot", "nat", "rat", "rel", "sens", "triv", "valu",
    "abs", "cre", "fle", "gre", "ple", "tre", "sky", "cry", "toy", "boy",
    "day", "play", "stay", "buoy", "gray", "glo", "ge", "geo", "the",
    "archaeo", "bio", "eco", "psycho", "socio", "techno", "hydro",
]


def fuzz_words(rng: random.Random, count: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    weighted = "aaaeeeiiooouubcdfghlmnprstvwyz"  # vowel-rich mix
    words = []
    for _ in range(count):
        mode = rng.randrange(3)
        if mode == 0:
            n = rng.randint(1, 12)
            words.append("".join(rng.choice(letters) for _ in range(n)))
        elif mode == 1:
            n = rng.randint(2, 9)
            words.append("".join(rng.choice(weighted) for _ in range(n)))
        else:
            root = rng.choice(ROOTS)
            mid = "".join(rng.choice(weighted) for _ in range(rng.randint(0, 4)))
            words.append(root + mid + rng.choice(SUFFIXES))
    return words


def build_vocabulary() -> list[str]:
    words: set[str] = set()
    for blob in (CURATED, AFFECT):
        words.update(w for w in blob.split() if w.isalpha() and w.islower())
    for root in ROOTS:
        for suffix in SUFFIXES:
            words.add(root + suffix)
    rng = random.Random(20110606)
    words.update(fuzz_words(rng, 20000))
    return sorted(words)


def main() -> None:
    out_path = ROOT / "tests" / "fixtures" / "porter_reference.txt"
    vocabulary = build_vocabulary()
    lines = ["# frozen Porter stemmer reference: <word> <stem>"]
    for word in vocabulary:
        lines.append(f"{word} {ref_stem(word)}")
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(vocabulary)} entries to {out_path}")

    from moodcycles import porter

    mismatches = [w for w in vocabulary if porter.stem(w) != ref_stem(w)]
    if mismatches:
        print(f"WARNING: production stemmer disagrees on {len(mismatches)} "
              f"entries, e.g. {mismatches[:10]}")
        sys.exit(1)
    print("production stemmer agrees on all entries")


if __name__ == "__main__":
    main()
