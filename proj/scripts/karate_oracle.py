#!/usr/bin/env python3
"""Brute-force enumeration of paradox statistics for the bundled karate fixture.

Independent cross-check for the C++ test suite: everything here is computed
by direct per-node enumeration from the edge list, with no shared code.
Run from the repo root:  python3 scripts/karate_oracle.py [data/karate.edges]
"""
import sys
from collections import defaultdict


def load(path):
    adj = defaultdict(set)
    with open(path) as f:
        for line in f:
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            u, v = line.split()[:2]
            adj[u].add(v)
            adj[v].add(u)
    labels = sorted(adj, key=int)
    idx = {u: i for i, u in enumerate(labels)}
    return [sorted(idx[v] for v in adj[u]) for u in labels]


def main(path):
    adj = load(path)
    n = len(adj)
    deg = [len(a) for a in adj]
    m = sum(deg) // 2
    print(f"nodes {n}")
    print(f"edges {m}")
    print(f"max_degree {max(deg)}")

    mean_d = sum(deg) / n
    mean_sq = sum(d * d for d in deg) / n
    friend_mean = sum(d * d for d in deg) / sum(deg)
    var_d = mean_sq - mean_d * mean_d
    print(f"mean_degree {mean_d!r}")
    print(f"friend_mean_degree {friend_mean!r}")
    print(f"fp_gap {friend_mean - mean_d!r}")
    print(f"var_over_mean {var_d / mean_d!r}")

    fp = [sum(deg[j] for j in adj[i]) / deg[i] > deg[i] for i in range(n)]
    print(f"fp_true_count {sum(fp)}")
    print(f"fp_flags {''.join('1' if x else '0' for x in fp)}")

    for mode, cmp in (("weak", lambda a, b: a >= b), ("strict", lambda a, b: a > b)):
        flags = [sum(1 for j in adj[i] if cmp(deg[j], deg[i])) > deg[i] / 2
                 for i in range(n)]
        print(f"sfp_{mode}_count {sum(flags)}")
        print(f"sfp_{mode}_fraction {sum(flags) / n!r}")
        print(f"sfp_{mode}_flags {''.join('1' if x else '0' for x in flags)}")
        by_deg = defaultdict(lambda: [0, 0])
        for i in range(n):
            by_deg[deg[i]][0] += flags[i]
            by_deg[deg[i]][1] += 1
        for k in sorted(by_deg):
            t, c = by_deg[k]
            print(f"sfp_{mode}_by_degree {k} {t}/{c}")

    # degree assortativity: Pearson over edge endpoints, both orientations
    xs, ys = [], []
    for i in range(n):
        for j in adj[i]:
            xs.append(deg[i])
            ys.append(deg[j])
    c = len(xs)
    mx = sum(xs) / c
    my = sum(ys) / c
    cov = sum(x * y for x, y in zip(xs, ys)) / c - mx * my
    vx = sum(x * x for x in xs) / c - mx * mx
    vy = sum(y * y for y in ys) / c - my * my
    print(f"assortativity {cov / (vx * vy) ** 0.5!r}")

    # transsortativity: Pearson over ordered pairs of distinct neighbours
    xs, ys = [], []
    for i in range(n):
        for j in adj[i]:
            for l in adj[i]:
                if j != l:
                    xs.append(deg[j])
                    ys.append(deg[l])
    c = len(xs)
    mx = sum(xs) / c
    cov = sum(x * y for x, y in zip(xs, ys)) / c - mx * mx
    vx = sum(x * x for x in xs) / c - mx * mx
    print(f"transsortativity {cov / vx!r}")

    # generalized FP gap with the trait on the two highest-degree nodes
    order = sorted(range(n), key=lambda i: (-deg[i], i))
    f = [0.0] * n
    for i in order[:2]:
        f[i] = 1.0
    lhs = sum(deg[i] * f[i] for i in range(n)) / sum(deg) - sum(f) / n
    cov_fd = sum(f[i] * deg[i] for i in range(n)) / n - (sum(f) / n) * mean_d
    print(f"gfp_top2_lhs {lhs!r}")
    print(f"gfp_top2_rhs {cov_fd / mean_d!r}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/karate.edges")
