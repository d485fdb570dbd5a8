"""Regenerate src/tplcoder/data/emoticons.txt.

Western faces are enumerated from eyes x nose x mouth; eastern forms are
listed by hand.
"""

from pathlib import Path

EYES = [":", ";", "="]
NOSES = ["", "-", "o", "^", "'"]
MOUTHS = [")", "(", "]", "[", "D", "P", "p", "O", "o", "3", "/", "\\", "|", "*", "$", "@", "}", "{", "S", "x", "X"]
REVERSED = [("(", ":"), ("(", ";"), ("(", "="), (")", ":"), ("[", ":"), ("]", ":")]
EXTRA = [
    "XD", "xD", "X-D", "x-D", ">:(", ">:-(", ">:)", ">:-)", ">;)", ":'(", ":'-(", ":')", ":'-)",
    "O:)", "O:-)", "0:)", "0:-)",
]
EASTERN = [
    "T-T", "T_T", "T.T", "T^T", ";_;", ";-;", "Q_Q",
    "^_^", "^-^", "^.^", "^^", "^o^", "^3^", "^_~", "^_-",
    "-_-", "-.-", "-__-", "=_=", ">_<", ">.<", "><", ">_>", "<_<", "o_O", "O_o", "o.O", "O.o", "o_o", "O_O",
    "0_0", "o.o", "O.O", "x_x", "X_X", "u_u", "U_U", "n_n", "¬_¬", "ಠ_ಠ", "ʘ‿ʘ", "(ツ)",
    "¯\\_(ツ)_/¯", "¯\\\\_(ツ)_/¯", "¯\\_(ヅ)_/¯", "(╯°□°）╯︵ ┻━┻", "(╯°□°)╯︵ ┻━┻", "┬─┬ノ( º _ ºノ)",
    "(^_^)", "(^.^)", "(-_-)", "(T_T)", "(>_<)", "(o_O)", "(^_^;)", "^_^;", "(*^_^*)", "(^o^)", "(^^)",
    "\\o/", "\\(^o^)/", "\\(^_^)/", "o/", "\\o", "<(^_^)>", "(:", ":-))",
]


def main():
    forms = []
    for e in EYES:
        for n in NOSES:
            for m in MOUTHS:
                forms.append(e + n + m)
    for m, e in REVERSED:
        for n in ["", "-", "'"]:
            forms.append(m + n + e)
    forms += EXTRA + EASTERN
    seen = set()
    out = ["# one emoticon per line; matched as whole tokens, longest first"]
    for f in forms:
        if f not in seen:
            seen.add(f)
            out.append(f)
    path = Path(__file__).resolve().parents[1] / "src" / "tplcoder" / "data" / "emoticons.txt"
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    print(f"wrote {len(seen)} emoticons to {path}")


if __name__ == "__main__":
    main()
