"""Regenerate the golden cases and the fixture checksum file.

Each case lists the annotations it must produce. ``exact`` cases must match
the resolved output one for one; the rest only need the listed entries.
"""

import hashlib
import json
from pathlib import Path

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "tplcoder" / "data" / "fixtures"

VQ = [
    ("really?!?!?!", "Emphasis", "?!?!?!"),
    ("awesome!!!!", "Emphasis", "!!!!"),
    ("You are the BEST", "Stress", "BEST"),
    ("I rEAlly want that", "Pitch", "rEAlly"),
    ("Best. Day. Ever.", "Rhythm", "Best. Day. Ever."),
    ("So looooooong", "Tempo", "looooooong"),
    ("I suppose.....", "Tempo", "....."),
    ('That was "fun".', "ScareQuotes", '"fun"'),
    ("", "Silence", ""),
    ("*whisper*", "Intensity", "*whisper*"),
    ("'vell vell'", "Intonation", "vell vell"),
    ("#S%^", "Censorship", "#S%^"),
    ("M-i-n-e", "Spelling", "M-i-n-e"),
]
VS = ("aww umm uh ah oh huh grrr BRRR sigh *sigh* (sigh) yum yumyum mmm yeah yay hmm ahh haha hehe lmao "
      "lmfao lol *laughing* (laughing) woah hmph whew Ewwwww Ouch Oops hiss moan groan drumroll slap knock "
      "fart crunch boom yawn belch sneeze snoring hiccup whistling shhh").split() + ["uh huh", "boo hoo"]
TK = ["xxx", "xoxo", "*hugs*", "🤝", "high five", "fist bump", "pat on the back", "slap", "punch", "handshake"]
VK = ["thumbs up", "👍", "rotfl", "💪", "eyeroll", "shrug", ":)", "😊", "T-T"]
A = [
    ("<3", "Symbol", "<3"),
    ("💛", "Emoji", "💛"),
    ("🔥", "Emoji", "🔥"),
    ("𝐁𝐄𝐒𝐓 𝐃𝐀𝐘", "Formatting", "𝐁𝐄𝐒𝐓"),
    ("B E S T", "Formatting", "B E S T"),
    ("Menu:\n- coffee\n- tea", "Formatting", "- coffee\n- tea"),
    ("Top picks:\n1. mocha\n2. latte", "Formatting", "1. mocha\n2. latte"),
]


def ann(category, surface, subtype=None):
    d = {"category": category, "surface": surface}
    if subtype:
        d["subtype"] = subtype
    return d


def cases():
    out = []

    def add(cid, text, expect, source, exact=False, **extra):
        out.append({"id": cid, "text": text, "expect": expect, "exact": exact, "source": source, **extra})

    for i, (text, subtype, surface) in enumerate(VQ, 1):
        add(f"vq-{i:02d}", text, [ann("VQ", surface, subtype)], f"typology:VQ:{subtype}")
    for i, text in enumerate(VS, 1):
        add(f"vs-{i:02d}", text, [ann("VS", text)], "typology:VS")
    for i, text in enumerate(TK, 1):
        add(f"tk-{i:02d}", text, [ann("TK", text)], "typology:TK")
    for i, text in enumerate(VK, 1):
        add(f"vk-{i:02d}", text, [ann("VK", text)], "typology:VK")
    for i, (text, subtype, surface) in enumerate(A, 1):
        add(f"a-{i:02d}", text, [ann("A", surface, subtype)], f"typology:A:{subtype}")

    add("note-single-bang", "Great news!", [], "coding-note:single-exclamation", exact=True)
    add("note-link-ellipsis", "Our new flavor is here… http://example.com/new", [],
        "coding-note:link-ellipsis", exact=True)
    add("note-link-ellipsis-long", "Our new flavor is here.... http://example.com/new", [],
        "coding-note:link-ellipsis", exact=True)
    add("note-truncated", "We " + "really " * 19 + "love what....", [ann("VQ", "really " * 18 + "really")],
        "coding-note:truncation", exact=True, platform="twitter")
    add("note-same-emoji", "✨ ✨ ✨ ✨ ✨", [ann("A", "✨ ✨ ✨ ✨ ✨", "Emoji")], "coding-note:same-emoji", exact=True)
    add("note-same-emoji-tight", "✨✨✨✨✨", [ann("A", "✨✨✨✨✨", "Emoji")], "coding-note:same-emoji", exact=True)
    add("note-different-emoji", "😊🐼🙄🔥",
        [ann("VK", "😊", "Emoji"), ann("VK", "🐼", "Emoji"), ann("VK", "🙄", "Emoji"), ann("A", "🔥", "Emoji")],
        "coding-note:different-emoji", exact=True)
    add("note-two-types", "hmmm hmmm hmmm hmmm hmmm",
        [ann("VQ", "hmmm hmmm hmmm hmmm hmmm", "Tempo"), ann("VS", "hmmm hmmm hmmm hmmm hmmm", "LexiconEntry")],
        "coding-note:two-types", exact=True, inline="{VQ}{VS}hmmm hmmm hmmm hmmm hmmm{/VS}{/VQ}")

    add("wholefoods", "A bad cupcake?!?! Oh No!!! I'm so sorry. *sigh* Thank you for letting us know",
        [ann("VQ", "?!?!", "Emphasis"), ann("VS", "Oh"), ann("VQ", "!!!", "Emphasis"), ann("VS", "*sigh*")],
        "example:apology-reply", exact=True)
    add("chester", "How do you spell Flamin' Hot CHEETOS Burrito? M-I-N-E",
        [ann("VQ", "M-I-N-E", "Spelling")], "example:spelled-word", exact=True)

    add("valid-bot", "I'm at McDonald's 4sq.com/1x53idj", [], "typology:bot", validity="bot")
    add("valid-spam", "Viagra Cialis cheap! SAVE HERE", [], "typology:spam", validity="spam")
    add("valid-rt-spam", "RT @deals: Viagra Cialis cheap! SAVE HERE", [], "coding-note:retweet-spam",
        validity="spam", is_repost=True)
    add("valid-rt-bot", "RT @friend: I'm at McDonald's 4sq.com/1x53idj", [], "coding-note:retweet-bot",
        validity="valid", is_repost=True)
    add("valid-noten", "Hola amigos, ¿cómo están todos hoy en la playa?", [], "typology:noten",
        validity="noten")
    return out


def main():
    rows = cases()
    golden = FIXTURES / "golden.jsonl"
    golden.write_text("".join(json.dumps(c, ensure_ascii=False, sort_keys=True) + "\n" for c in rows),
                      encoding="utf-8")
    sums = []
    for p in sorted(FIXTURES.iterdir()):
        if p.name != "SHA256SUMS":
            sums.append(f"{hashlib.sha256(p.read_bytes()).hexdigest()}  {p.name}")
    (FIXTURES / "SHA256SUMS").write_text("\n".join(sums) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} golden cases and {len(sums)} checksums")


if __name__ == "__main__":
    main()
