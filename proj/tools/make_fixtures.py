#!/usr/bin/env python3
"""Search for Venn quadrangulations containing a Hall obstruction with a SAT solver.

A quadrangulation is a set of 4-cycles of Q_n such that every used edge lies on exactly two
chosen squares, every vertex link is a single cycle, and there are 2^n - 2 squares (so the
surface is a sphere once connected). Connectivity of the graph and of every half-space is
added lazily as cut clauses. Output: one face per line, labels as bit strings.

--monotone adds the weight condition with respect to 0^n, and with it the fact that every vertex
of weight 0 < w < n lies on exactly two faces with one up and one down edge at it.
--fixed-ladder prescribes a ladder from 0^n and keeps it out of the obstruction.
--exact asks for the canonical violator (alternating reachability) to have the given sizes:
the matching deficiency is forced to 1 through an explicit matching of the remaining vertices.
"""

import argparse
import itertools
import random
import sys

import networkx as nx

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Cadical195


def bit(n, k):
    return 1 << (n - k)


def label(x, n):
    return format(x, "0{}b".format(n))


class Model:
    def __init__(self, n, red, blue, monotone, seed, fixed_ladder=False):
        self.n = n
        self.pool = IDPool()
        self.clauses = []
        self.size = 1 << n
        self.squares = []
        for i, j in itertools.combinations(range(1, n + 1), 2):
            for x in range(self.size):
                if x & bit(n, i) or x & bit(n, j):
                    continue
                self.squares.append((x, x ^ bit(n, i), x ^ bit(n, i) ^ bit(n, j), x ^ bit(n, j)))
        self.edges = [(x, x ^ bit(n, k)) for x in range(self.size) for k in range(1, n + 1) if not x & bit(n, k)]
        self.f = {s: self.pool.id(("f", s)) for s in self.squares}
        self.e = {e: self.pool.id(("e", e)) for e in self.edges}
        self.edge_squares = {e: [] for e in self.edges}
        for s in self.squares:
            for a, b in zip(s, s[1:] + s[:1]):
                self.edge_squares[(min(a, b), max(a, b))].append(s)
        self.rng = random.Random(seed)
        self.red = red
        self.build(red, blue, monotone)
        if fixed_ladder:
            self.fix_ladder(red)

    def square_var(self, base, i, j):
        """Square spanned by directions i and j at the vertex base (both bits 0)."""
        n = self.n
        i, j = min(i, j), max(i, j)
        return self.f[(base, base ^ bit(n, i), base ^ bit(n, i) ^ bit(n, j), base ^ bit(n, j))]

    def ev(self, a, b):
        return self.e[(min(a, b), max(a, b))]

    def card(self, lits, bound, kind):
        enc = {"le": CardEnc.atmost, "ge": CardEnc.atleast, "eq": CardEnc.equals}[kind]
        cnf = enc(lits=lits, bound=bound, vpool=self.pool, encoding=EncType.seqcounter)
        self.clauses.extend(cnf.clauses)

    def build(self, red, blue, monotone):
        n = self.n
        for e, sq in self.edge_squares.items():
            fs = [self.f[s] for s in sq]
            for v in fs:
                self.clauses.append([-v, self.e[e]])
            # used edge lies on exactly two squares
            self.card(fs, 2, "le")
            for v in fs:
                self.clauses.append([-self.e[e]] + [w for w in fs if w != v])
        # vertex links are single cycles
        for x in range(self.size):
            dirs = list(range(1, n + 1))
            self.clauses.append([self.ev(x, x ^ bit(n, d)) for d in dirs])

            def face(i, j):
                i, j = min(i, j), max(i, j)
                base = x & ~bit(n, i) & ~bit(n, j)
                return self.f[(base, base ^ bit(n, i), base ^ bit(n, i) ^ bit(n, j), base ^ bit(n, j))]

            for k in range(3, n - 2):
                for t in itertools.combinations(dirs, k):
                    first, rest = t[0], t[1:]
                    for perm in itertools.permutations(rest):
                        if perm[0] > perm[-1]:
                            continue
                        cyc = (first,) + perm
                        fl = [face(cyc[a], cyc[(a + 1) % k]) for a in range(k)]
                        for d in dirs:
                            if d not in t:
                                self.clauses.append([-v for v in fl] + [-self.ev(x, x ^ bit(n, d))])
        self.card(list(self.f.values()), self.size - 2, "eq")
        if red:
            s = {x: self.pool.id(("s", x)) for x in range(self.size) if bin(x).count("1") % 2 == 0}
            t = {y: self.pool.id(("t", y)) for y in range(self.size) if bin(y).count("1") % 2 == 1}
            for x in s:
                for k in range(1, n + 1):
                    y = x ^ bit(n, k)
                    self.clauses.append([-s[x], -self.ev(x, y), t[y]])
            self.card(list(s.values()), red, "eq")
            self.card(list(t.values()), blue, "le")
        if monotone:
            for x in range(1, self.size - 1):
                w = bin(x).count("1")
                down = [self.ev(x, x ^ bit(n, k)) for k in range(1, n + 1) if x & bit(n, k)]
                up = [self.ev(x, x ^ bit(n, k)) for k in range(1, n + 1) if not x & bit(n, k)]
                self.clauses.append(down)
                self.clauses.append(up)
                # down and up neighbours form two arcs of the link: two mixed faces
                mixed = []
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        if x & bit(n, i) or not x & bit(n, j):
                            continue
                        mixed.append(self.square_var(x & ~bit(n, j), i, j))
                self.card(mixed, 2, "eq")

    def fix_ladder(self, red):
        """Rails x_i = 1^(i-1) 0^(n-i+1), y_i = x_i + bit n; every ladder from 0^n is of this form
        up to a permutation of positions."""
        n = self.n
        xs = [sum(bit(n, k) for k in range(1, i)) for i in range(1, n + 1)]
        ys = [x | bit(n, n) for x in xs]
        for i in range(n - 1):
            sq = tuple(sorted((xs[i], xs[i + 1], ys[i + 1], ys[i])))
            match = [s for s in self.squares if tuple(sorted(s)) == sq]
            self.clauses.append([self.f[match[0]]])
        if red:
            for v in xs + ys:
                for key in (("s", v), ("t", v)):
                    if key in self.pool.obj2id:
                        self.clauses.append([-self.pool.obj2id[key]])

    def cuts(self, used):
        """Cut clauses for every disconnected vertex set that must be connected."""
        n = self.n
        adj = {x: [] for x in range(self.size)}
        for a, b in used:
            adj[a].append(b)
            adj[b].append(a)
        out = []

        def components(keep):
            seen, comps = set(), []
            for v in keep:
                if v in seen:
                    continue
                comp, stack = {v}, [v]
                seen.add(v)
                while stack:
                    u = stack.pop()
                    for w in adj[u]:
                        if w in keep and w not in seen:
                            seen.add(w)
                            comp.add(w)
                            stack.append(w)
                comps.append(comp)
            return comps

        sets = [set(range(self.size))]
        for i in range(1, n + 1):
            for b in (0, 1):
                sets.append({x for x in range(self.size) if bool(x & bit(n, i)) == bool(b)})
        for keep in sets:
            comps = components(keep)
            if len(comps) < 2:
                continue
            for comp in comps:
                lits = [self.ev(a, b) for a, b in self.edges
                        if (a in comp) != (b in comp) and a in keep and b in keep]
                out.append(lits)
        return out

    def saturate_outside(self, s_set, n_set):
        """Clauses for a matching that covers every even vertex outside S using odd vertices
        outside N; with |S| = |N| + 1 this makes the matching deficiency exactly 1."""
        n, out = self.n, []
        skip = set(s_set) | set(n_set)
        mates = {}
        for x in range(self.size):
            if x in skip or bin(x).count("1") % 2:
                continue
            lits = []
            for k in range(1, n + 1):
                y = x ^ bit(n, k)
                if y in skip:
                    continue
                v = self.pool.id(("m", x, y))
                out.append([-v, self.ev(x, y)])
                lits.append(v)
                mates.setdefault(y, []).append(v)
            out.append(lits)
            out.extend(CardEnc.atmost(lits=lits, bound=1, vpool=self.pool, encoding=EncType.pairwise).clauses)
        for lits in mates.values():
            out.extend(CardEnc.atmost(lits=lits, bound=1, vpool=self.pool, encoding=EncType.pairwise).clauses)
        return out

    def saturate_free(self):
        """As saturate_outside with S and T variable: every even vertex not in S is matched to an
        odd vertex not in T, and |T| = |S| - 1."""
        n, out = self.n, []
        mates = {}
        for x in range(self.size):
            if bin(x).count("1") % 2:
                continue
            lits = []
            for k in range(1, n + 1):
                y = x ^ bit(n, k)
                v = self.pool.id(("m", x, y))
                out.append([-v, self.ev(x, y)])
                out.append([-v, -self.pool.obj2id[("t", y)]])
                lits.append(v)
                mates.setdefault(y, []).append(v)
            out.append([self.pool.obj2id[("s", x)]] + lits)
            out.extend(CardEnc.atmost(lits=lits, bound=1, vpool=self.pool, encoding=EncType.pairwise).clauses)
        for lits in mates.values():
            out.extend(CardEnc.atmost(lits=lits, bound=1, vpool=self.pool, encoding=EncType.pairwise).clauses)
        t = [self.pool.obj2id[("t", y)] for y in range(self.size) if ("t", y) in self.pool.obj2id]
        out.extend(CardEnc.equals(lits=t, bound=self.red - 1, vpool=self.pool, encoding=EncType.seqcounter).clauses)
        return out

    def solve(self, max_rounds, accept, assumptions=(), conflicts=None, extra=()):
        solver = Cadical195(bootstrap_with=self.clauses + list(extra))
        try:
            return self._rounds(solver, max_rounds, accept, list(assumptions), conflicts)
        finally:
            solver.delete()

    def _rounds(self, solver, max_rounds, accept, assumptions, conflicts):
        for rnd in range(max_rounds):
            if conflicts:
                solver.conf_budget(conflicts)
            status = solver.solve_limited(assumptions=assumptions)
            if not status:
                print("  {}".format("unsat" if status is False else "budget exhausted"), file=sys.stderr, flush=True)
                return None
            model = set(v for v in solver.get_model() if v > 0)
            used = [e for e in self.edges if self.e[e] in model]
            cuts = self.cuts(used)
            if cuts:
                for c in cuts:
                    solver.add_clause(c)
                continue
            faces = [s for s in self.squares if self.f[s] in model]
            self.chosen_s = [x for x in range(self.size) if self.pool.obj2id.get(("s", x)) in model]
            if accept(faces):
                return faces
            # block this face set
            solver.add_clause([-self.f[s] for s in faces])
            print("round {}: rejected candidate".format(rnd), file=sys.stderr)
        return None


def read_faces(path):
    with open(path) as f:
        rows = [line.split() for line in f if line.strip()]
    return len(rows[0][0]), [tuple(int(w, 2) for w in r) for r in rows]


def hall_violator(faces):
    """S and N(S) from alternating reachability; the smaller S over both sides."""
    g = nx.Graph()
    for f in faces:
        for a, b in zip(f, f[1:] + f[:1]):
            g.add_edge(a, b)
    even = [x for x in g if bin(x).count("1") % 2 == 0]
    m = nx.bipartite.hopcroft_karp_matching(g, top_nodes=even)
    best = None
    for side in (0, 1):
        free = [x for x in g if bin(x).count("1") % 2 == side and x not in m]
        seen, queue = set(free), list(free)
        while queue:
            u = queue.pop()
            for w in g[u]:
                if w in seen:
                    continue
                seen.add(w)
                if w in m and m[w] not in seen:
                    seen.add(m[w])
                    queue.append(m[w])
        if not free:
            continue
        s_set = sorted(x for x in seen if bin(x).count("1") % 2 == side)
        n_set = sorted(x for x in seen if bin(x).count("1") % 2 != side)
        if best is None or len(s_set) < len(best[0]):
            best = (s_set, n_set)
    edges = [(a, b) for a in best[0] for b in g[a]]
    return best[0], best[1], edges


def template_candidates(n, path):
    """Copies of the template's obstruction in the facets x_n = b of Q_n, x -> ((x ^ m) << 1) | b."""
    dim, faces = read_faces(path)
    if dim != n - 1:
        raise SystemExit("template must have dimension n - 1")
    s_set, n_set, edges = hall_violator(faces)
    for b in (0, 1):
        for mask in range(1 << dim):
            def phi(x):
                return ((x ^ mask) << 1) | b
            if bin(phi(s_set[0])).count("1") % 2:
                continue
            yield (b, mask), [phi(x) for x in s_set], [phi(y) for y in n_set], [(phi(x), phi(y)) for x, y in edges]


def find_ladder(n, faces, avoid):
    """A ladder from 0^n whose vertices avoid the given set, or None."""
    face_sets = {frozenset(f) for f in faces}
    edges = set()
    for f in faces:
        for a, b in zip(f, f[1:] + f[:1]):
            edges.add((min(a, b), max(a, b)))

    def edge(a, b):
        return (min(a, b), max(a, b)) in edges

    full = (1 << n) - 1
    for k in range(1, n + 1):
        x, y = 0, bit(n, k)
        if x in avoid or y in avoid or not edge(x, y):
            continue
        stack = [([x], [y])]
        while stack:
            xs, ys = stack.pop()
            if len(xs) == n:
                if ys[-1] == full:
                    return xs, ys, k
                continue
            for t in range(n, 0, -1):
                if t == k or xs[-1] & bit(n, t):
                    continue
                nx, ny = xs[-1] ^ bit(n, t), ys[-1] ^ bit(n, t)
                if nx in avoid or ny in avoid:
                    continue
                if frozenset((xs[-1], nx, ny, ys[-1])) in face_sets:
                    stack.append((xs + [nx], ys + [ny]))
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--red", type=int, default=12)
    ap.add_argument("--blue", type=int, default=11)
    ap.add_argument("--monotone", action="store_true")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--rounds", type=int, default=100000)
    ap.add_argument("--ladder", action="store_true", help="require a ladder from 0^n avoiding S and N(S)")
    ap.add_argument("--fixed-ladder", action="store_true", help="prescribe the ladder along positions 1..n-1 with rungs of type n")
    ap.add_argument("--template", help="face list of an (n-1)-quadrangulation whose obstruction is copied")
    ap.add_argument("--conflicts", type=int, default=200000, help="conflict budget per template placement")
    ap.add_argument("--exact", action="store_true", help="the canonical violator must have sizes red/blue")
    ap.add_argument("--only", help="comma-separated b:mask placements to try")
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    m = Model(args.n, args.red, args.blue, args.monotone, args.seed, args.fixed_ladder)
    print("vars {} clauses {}".format(m.pool.top, len(m.clauses)), file=sys.stderr)
    def accept(faces):
        if args.exact:
            s_set, n_set, _ = hall_violator(faces)
            if (len(s_set), len(n_set)) != (args.red, args.blue):
                return False
            h = set(s_set) | set(n_set)
        else:
            used = set()
            for f in faces:
                for a, b in zip(f, f[1:] + f[:1]):
                    used.add((a, b))
                    used.add((b, a))
            h = set(m.chosen_s)
            for x in m.chosen_s:
                for k in range(1, args.n + 1):
                    if (x, x ^ bit(args.n, k)) in used:
                        h.add(x ^ bit(args.n, k))
        return not args.ladder or find_ladder(args.n, faces, h) is not None

    if args.template:
        faces = None
        only = None
        if args.only:
            only = {tuple(int(v) for v in p.split(":")) for p in args.only.split(",")}
        for key, s_set, n_set, edges in template_candidates(args.n, args.template):
            if only is not None and key not in only:
                continue
            nn = set(n_set)
            assume = [m.pool.obj2id[("s", x)] for x in s_set]
            assume += [-m.pool.obj2id[("t", y)] for y in range(m.size)
                       if ("t", y) in m.pool.obj2id and y not in nn]
            assume += [m.ev(a, b) for a, b in edges]
            print("placement b={} mask={}".format(*key), file=sys.stderr, flush=True)
            extra = m.saturate_outside(s_set, n_set) if args.exact else []
            faces = m.solve(args.rounds, accept, assume, args.conflicts, extra)
            if faces is not None:
                break
    else:
        faces = m.solve(args.rounds, accept, extra=m.saturate_free() if args.exact else ())
    if faces is None:
        print("no solution", file=sys.stderr)
        return 1
    with open(args.out, "w") as out:
        for s in faces:
            out.write(" ".join(label(x, args.n) for x in s) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
