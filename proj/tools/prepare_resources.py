#!/usr/bin/env python3
"""Builds data/lexical-resources.tar.gz from upstream distributions.

Inputs (all fetched once by hand through the package registries):

  --wordnet DIR      WordNet 3.0 wndb directory (the copy shipped inside the
                     `wn==0.0.23` sdist under wn/data/wordnet-3.0).
  --sentiwordnet F   modifiedSentiWordNet.json from the `sentiword@0.0.1` npm
                     package. It carries the SentiWordNet 3.0 scores for all
                     117,659 synsets with one record per synset term; glosses
                     are stripped. The canonical TSV is rebuilt from it using
                     WordNet 3.0 for sense numbers and glosses.
  --subtlex F        index.json from the `subtlex-word-frequencies@2.0.0` npm
                     package (SUBTLEX-US raw counts). Case variants are merged.

Output layout inside the archive:

  wordnet-3.0/{index,data}.{noun,verb,adj,adv}, wordnet-3.0/LICENSE
  SentiWordNet_3.0.0.txt
  subtlex-us.tsv
"""

import argparse
import io
import json
import os
import re
import tarfile
from collections import defaultdict

WN_FILES = [f"{kind}.{pos}" for kind in ("index", "data")
            for pos in ("noun", "verb", "adj", "adv")] + ["LICENSE"]
SUFFIX = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}


def wordnet_glosses_and_senses(wn_dir):
    # keyed by SentiWordNet POS, which folds adjective satellites into 'a'
    glosses = {}
    lemmas = {}
    for pos, suffix in SUFFIX.items():
        with open(os.path.join(wn_dir, f"data.{suffix}"), encoding="latin-1") as fh:
            for line in fh:
                if line.startswith("  "):
                    continue
                head, _, gloss = line.partition(" | ")
                fields = head.split()
                offset = int(fields[0])
                count = int(fields[3], 16)
                # adjective syntactic markers such as "(p)" are not part of the lemma
                words = [re.sub(r"\([a-z]+\)$", "", fields[4 + 2 * i]).lower()
                         for i in range(count)]
                glosses[(pos, offset)] = gloss.strip()
                lemmas[(pos, offset)] = words
    senses = {}
    for pos, suffix in SUFFIX.items():
        with open(os.path.join(wn_dir, f"index.{suffix}"), encoding="latin-1") as fh:
            for line in fh:
                if line.startswith("  "):
                    continue
                fields = line.split()
                lemma = fields[0]
                synset_cnt = int(fields[2])
                offsets = [int(x) for x in fields[-synset_cnt:]]
                for rank, off in enumerate(offsets, start=1):
                    senses[(pos, off, lemma)] = rank
    return glosses, lemmas, senses


def build_sentiwordnet(json_path, wn_dir):
    with open(json_path) as fh:
        raw = json.load(fh)
    scores = {}
    for records in raw.values():
        for rec in records:
            key = (rec["# POS"], int(rec["ID"]))
            value = (rec["PosScore"], rec["NegScore"])
            if key in scores and scores[key] != value:
                raise SystemExit(f"conflicting scores for {key}")
            scores[key] = value
    glosses, lemmas, senses = wordnet_glosses_and_senses(wn_dir)
    out = io.StringIO()
    out.write("# SentiWordNet 3.0 scores (CC BY-SA 3.0, Baccianella, Esuli, Sebastiani).\n")
    out.write("# Rebuilt from the sentiword@0.0.1 npm redistribution; terms and glosses\n")
    out.write("# restored from WordNet 3.0.\n")
    out.write("# POS\tID\tPosScore\tNegScore\tSynsetTerms\tGloss\n")
    for (pos, offset) in sorted(scores, key=lambda k: ("anrv".index(k[0]), k[1])):
        pos_score, neg_score = scores[(pos, offset)]
        words = lemmas.get((pos, offset))
        if words is None:
            raise SystemExit(f"synset {pos} {offset:08d} missing from WordNet 3.0")
        terms = " ".join(f"{w}#{senses.get((pos, offset, w), 1)}" for w in words)
        out.write(f"{pos}\t{offset:08d}\t{pos_score}\t{neg_score}\t{terms}\t{glosses[(pos, offset)]}\n")
    return out.getvalue()


def build_frequency(json_path):
    with open(json_path) as fh:
        raw = json.load(fh)
    counts = defaultdict(int)
    for rec in raw:
        counts[rec["word"].lower()] += int(rec["count"])
    out = io.StringIO()
    out.write("word\tcount\n")
    for word, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
        out.write(f"{word}\t{count}\n")
    return out.getvalue()


def add_bytes(tar, name, payload):
    info = tarfile.TarInfo(name)
    info.size = len(payload)
    info.mtime = 0
    info.mode = 0o644
    tar.addfile(info, io.BytesIO(payload))


def main():
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--wordnet", required=True)
    parser.add_argument("--sentiwordnet", required=True)
    parser.add_argument("--subtlex", required=True)
    parser.add_argument("--output", default="data/lexical-resources.tar.gz")
    args = parser.parse_args()

    swn = build_sentiwordnet(args.sentiwordnet, args.wordnet).encode("utf-8")
    freq = build_frequency(args.subtlex).encode("utf-8")
    with tarfile.open(args.output, "w:gz") as tar:
        for name in WN_FILES:
            with open(os.path.join(args.wordnet, name), "rb") as fh:
                add_bytes(tar, f"wordnet-3.0/{name}", fh.read())
        add_bytes(tar, "SentiWordNet_3.0.0.txt", swn)
        add_bytes(tar, "subtlex-us.tsv", freq)


if __name__ == "__main__":
    main()
