#!/usr/bin/env python3
"""Print the worked 4-node examples: estimated vs exact distance numbers."""

import argparse
import json

from psp_centrality.experiments import figure_examples


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--phi", type=float, default=0.8)
    args = parser.parse_args()
    print(json.dumps(figure_examples(args.phi), indent=2))


if __name__ == "__main__":
    main()
