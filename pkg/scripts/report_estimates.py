#!/usr/bin/env python3
"""Print the size/attack-cost report for one or more profiles.

Usage: report_estimates.py [profile ...]     (default: toy paper-l1)
"""

import sys

from cbsc.estimator import format_text, full_report
from cbsc.params import setup


def main(argv):
    profiles = argv or ["toy", "paper-l1"]
    for name in profiles:
        params = setup(name)
        print(f"== {params.name} ==")
        print(format_text(full_report(params)))
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
