"""Seeded synthetic corpora shared by several test modules."""

import random

# ordinary vocabulary with no lexicon hits, no doubled-up letters, no acronyms
PROSE_WORDS = (
    "the a our your this that new fresh good great warm cold small big bright quiet local simple "
    "morning evening weekend summer winter coffee tea bread cake salad recipe kitchen garden store "
    "team friends family customers neighbors city park market table window street river "
    "is are was were will can could should might must have has had make made bring brought try "
    "tried enjoy enjoyed share shared visit visited open opened find found love loved like want "
    "today tomorrow later soon again always often really very quite still just also "
    "with for from into over under near about after before during without "
    "and but or so because while when where how what why who "
    "delivery order menu flavor season holiday gift card price sample taste"
).split()


def prose_message(rng: random.Random) -> str:
    sentences = []
    for _ in range(rng.randint(1, 3)):
        words = [rng.choice(PROSE_WORDS) for _ in range(rng.randint(3, 12))]
        words[0] = words[0].capitalize()
        sentences.append(" ".join(words) + rng.choice(".?!"))
    return " ".join(sentences)


def prose_corpus(n: int, seed: int = 1) -> list[str]:
    rng = random.Random(seed)
    return [prose_message(rng) for _ in range(n)]


TPL_BITS = (
    "!!!", "?!?!", "sooo", "BEST", "*sigh*", "lol", "haha", "xoxo", ":)", ";-)", "T-T", "<3", "😊", "🔥",
    "✨ ✨ ✨", "👍🏽", "🐼", "hmmm hmmm hmmm", "M-I-N-E", "#S%^", '"fun"', "rEAlly", "....", "high five",
    "*whisper*", "vell vell", "🤝", "eyeroll", "Best. Day. Ever.", "https://example.com/x", "@pal", "#tbt",
)


def mixed_message(rng: random.Random) -> str:
    parts = []
    for _ in range(rng.randint(1, 8)):
        parts.append(rng.choice(TPL_BITS) if rng.random() < 0.4 else rng.choice(PROSE_WORDS))
    sep = rng.choice([" ", " ", " ", "\n", "  "])
    return sep.join(parts)


def mixed_corpus(n: int, seed: int = 7) -> list[str]:
    rng = random.Random(seed)
    return [mixed_message(rng) for _ in range(n)]
