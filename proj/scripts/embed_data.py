#!/usr/bin/env python3
"""Regenerate include/kinsa/detail/embedded_data.hpp from the data/ files.

The header embeds each data file verbatim as a raw string literal so the
library works without an install prefix; a unit test asserts the embedded
copies stay byte-identical to the files. Run from anywhere:

    python3 scripts/embed_data.py
"""

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FILES = [
    ("fixtures_txt", "data/fixtures.txt"),
    ("our6_robot", "data/robots/our6.robot"),
    ("wam6_robot", "data/robots/wam6.robot"),
    ("wam6_wrist_robot", "data/robots/wam6-wrist.robot"),
    ("wam6_code_robot", "data/robots/wam6-code.robot"),
]

HEADER = """\
// Generated by scripts/embed_data.py from the files under data/.
// Do not edit by hand; edit the data files and regenerate.
#pragma once

namespace kinsa::detail {

"""

FOOTER = """\
} // namespace kinsa::detail
"""


def main() -> None:
    parts = [HEADER]
    for name, rel in FILES:
        text = (ROOT / rel).read_text()
        if ")kinsa\"" in text:
            raise SystemExit(f"{rel}: contains the raw-string delimiter")
        parts.append(f"// {rel}\n")
        parts.append(f'inline constexpr char {name}[] = R"kinsa({text})kinsa";\n\n')
    parts.append(FOOTER)
    out = ROOT / "include/kinsa/detail/embedded_data.hpp"
    out.write_text("".join(parts))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
