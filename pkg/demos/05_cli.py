"""The command line over the bundled corpus file.

Same as running ``dsttripos <command> demos/corpus.tri ...`` in a shell.
"""
import sys
from pathlib import Path

from dsttripos.cli import run

corpus = str(Path(__file__).with_name("corpus.tri"))

for argv in (
    ["validate", corpus],
    ["show", corpus, "--expr", "(and P Q)"],
    ["check", corpus, "--seq", "P", "P", "--realizer", "idP"],
    ["check", corpus, "--seq", "P", "E", "--realizer", "idP"],
    ["decide", corpus, "--seq", "true", "false"],
    ["compile", corpus, "--proof", "swapPQ"],
):
    print("$ dsttripos", " ".join(a if a != corpus else "demos/corpus.tri" for a in argv))
    code = run(argv, sys.stdout, sys.stdout)
    print(f"(exit {code})\n")
