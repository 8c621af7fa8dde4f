"""
Sequence files
==============

Writes ``k value`` lines the way the CLI ``bfile`` command does.
"""
from ptperm import cli

for stat in sorted(cli.BFILE_STATS):
    print(stat)
    print("  " + ", ".join(line.split()[1] for line in cli.bfile_lines(stat, 8)))
