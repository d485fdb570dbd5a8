"""Regenerate src/tplcoder/data/emoji_map.tsv from the ``emoji`` package.

Classification uses CLDR names and aliases:

* touch between people (handshake, hug, kiss, holding hands, fist bump) -> TK
* faces, anthropomorphized animal faces, body parts, gestures, people -> VK
* everything else -> A

Keys are stored with VS16 and skin-tone modifiers stripped; the runtime
lookup strips them the same way.
"""

from pathlib import Path

import emoji

TK_WORDS = {"handshake", "hugging", "hugs", "kiss", "kissing", "couplekiss"}
TK_PHRASES = ("holding_hands", "oncoming_fist", "left-facing_fist", "right-facing_fist", "punch", "facepunch")
VK_WORDS = {
    "face", "faces", "hand", "hands", "finger", "fingers", "thumbs", "thumbsup", "thumbsdown", "fist", "palm",
    "palms", "arm", "biceps", "muscle", "leg", "foot", "ear", "nose", "eye", "eyes", "mouth", "tongue", "lips",
    "tooth", "brain", "skull", "person", "people", "man", "woman", "men", "women", "boy", "girl", "child",
    "baby", "adult", "family", "couple", "prince", "princess", "santa", "claus", "mage", "fairy", "vampire",
    "merperson", "mermaid", "merman", "elf", "genie", "zombie", "troll", "superhero", "supervillain",
    "ninja", "detective", "guard", "astronaut", "cook", "farmer", "student", "teacher", "judge", "pilot",
    "firefighter", "police", "officer", "scientist", "technologist", "singer", "artist", "mechanic",
    "worker", "juggling", "dancing", "facepalming", "shrugging", "bowing", "gesturing", "tipping",
    "raising", "pouting", "frowning", "selfie", "ghost", "alien", "robot", "ogre", "goblin", "clown",
    "bust", "busts", "silhouette", "footprints", "backhand", "pinched", "pinching", "vulcan", "waving",
    "clapping", "nail", "biting", "gesture", "head", "lungs", "anatomical", "laughing", "horns",
    "cartwheeling", "feeding", "struck", "headscarf", "ears",
}
# heads drawn as faces even though the CLDR name lacks "face"
ANIMAL_HEADS = set(
    "🐶🐱🐭🐹🐰🦊🐻🐼🐨🐯🦁🐮🐷🐸🐵🙈🙉🙊🐺🐗🐴🦄🐲🐔🦓🦒🦝🫎🐽😸😹😺😻😼😾😿🙀"
)
VK_PHRASES = ("index_pointing",)
NOT_BODY_WORDS = {
    "shoe", "clothes", "hat", "sandal", "boot", "room", "bottle", "chick", "symbol", "flag", "tree", "poultry",
    "palette", "car", "fan", "light", "room",
}


def tokens(name: str) -> set[str]:
    return set(name.strip(":").replace("-", "_").lower().split("_"))


def classify(cluster: str, names: list[str]) -> str:
    if cluster in ANIMAL_HEADS:
        return "VK"
    words = set().union(*(tokens(n) for n in names))
    joined = " ".join(n.lower() for n in names)
    if words & TK_WORDS or any(p in joined for p in TK_PHRASES):
        return "TK"
    if (words & VK_WORDS or any(p in joined for p in VK_PHRASES)) and not words & NOT_BODY_WORDS and "ear_of" not in joined:
        return "VK"
    return "A"


def strip_key(cluster: str) -> str:
    return "".join(c for c in cluster if c != "️" and not 0x1F3FB <= ord(c) <= 0x1F3FF)


def main():
    fq = emoji.STATUS["fully_qualified"]
    table: dict[str, str] = {}
    for cluster, info in emoji.EMOJI_DATA.items():
        if info["status"] != fq:
            continue
        key = strip_key(cluster)
        if not key or key in table:
            continue
        names = [info["en"]] + list(info.get("alias", []))
        table[key] = classify(key, names)
    # a ZWJ sequence built from people keeps the people's class
    for key in table:
        if "\u200d" in key and table[key] == "A":
            parts = {table.get(p) for p in key.split("\u200d")}
            if "TK" in parts:
                table[key] = "TK"
            elif "VK" in parts:
                table[key] = "VK"
    out = ["# emoji cluster (VS16 and skin tones stripped) followed by TK, VK or A"]
    for key in sorted(table):
        out.append(f"{key}\t{table[key]}")
    path = Path(__file__).resolve().parents[1] / "src" / "tplcoder" / "data" / "emoji_map.tsv"
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    counts = {c: list(table.values()).count(c) for c in ("TK", "VK", "A")}
    print(f"wrote {len(table)} entries to {path}: {counts}")


if __name__ == "__main__":
    main()
