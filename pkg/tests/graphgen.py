"""Random valid stable-map graphs for property tests.

The generator picks ramification profiles first and solves each dominant
component's genus from Riemann-Hurwitz (padding with extra ramification
when the right side would force a negative genus or the wrong parity),
joins all components into a connected dual graph, makes contracted
components that touch share an image point, and repairs stability by
attaching extra nodes. The validate call at the end is the generator's
own guard: everything returned is a valid graph by construction.

Only integer randomness is used, so a seeded random.Random reproduces
the same graphs on every run.
"""

import random

from hurwitz.partitions import enumerate_partitions
from hurwitz.stablemap import (
    ContractedComponent,
    DominantComponent,
    Node,
    StableMapGraph,
    validate,
)


class _Labels:
    """Fresh point labels, occasionally reusing an earlier one."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.count = 0
        self.pool: list[str] = []

    def point(self, avoid=()) -> str:
        reusable = [p for p in self.pool if p not in avoid]
        if reusable and self.rng.randrange(4) == 0:
            return self.rng.choice(reusable)
        self.count += 1
        label = f"q{self.count}"
        self.pool.append(label)
        return label


def _random_dominant(rng, cid, target_genus, labels):
    degree = rng.randint(1, 4)
    parts_all = enumerate_partitions(degree)
    nontrivial = [p for p in parts_all if p != (1,) * degree]
    profiles: list[tuple[str, tuple[int, ...]]] = []
    used: set[str] = set()

    def attach(profile):
        point = labels.point(avoid=used)
        used.add(point)
        profiles.append((point, profile))

    for _ in range(rng.randint(0, 2)):
        attach(rng.choice(parts_all))

    def weight():
        return sum(e - 1 for _point, prof in profiles for e in prof)

    # solve 2g - 2 = degree*(2*target_genus - 2) + weight for g >= 0:
    # pad until the right side reaches -2, then fix its parity
    base = degree * (2 * target_genus - 2)
    while base + weight() < -2:
        attach(rng.choice(nontrivial))
    if (base + weight()) % 2:
        attach((2,) + (1,) * (degree - 2))
    genus = (base + weight() + 2) // 2
    return {
        "kind": "dominant",
        "id": cid,
        "genus": genus,
        "degree": degree,
        "ram": tuple(profiles),
    }


def random_valid_graph(rng: random.Random) -> StableMapGraph:
    target_genus = rng.choice((0, 0, 0, 1, 2))
    labels = _Labels(rng)

    drafts = [
        _random_dominant(rng, f"A{k + 1}", target_genus, labels)
        for k in range(rng.randint(1, 3))
    ]
    for k in range(rng.randint(0, 2)):
        drafts.append({
            "kind": "contracted",
            "id": f"B{k + 1}",
            "genus": rng.choice((0, 0, 1, 1, 2)),
        })
    rng.shuffle(drafts)

    # spanning tree for connectedness, then a few extra edges for cycles
    # and self-nodes
    edges = [(i, rng.randrange(i)) for i in range(1, len(drafts))]
    for _ in range(rng.randint(0, 2)):
        edges.append((rng.randrange(len(drafts)), rng.randrange(len(drafts))))

    # stability repair: contracted genus 0 needs three branches, genus 1
    # one; partners are dominant components (or the component itself, as
    # a self-node) so image grouping below stays untouched
    dominant_idx = [i for i, s in enumerate(drafts) if s["kind"] == "dominant"]

    def branches(i):
        return sum((a == i) + (b == i) for a, b in edges)

    for i, draft in enumerate(drafts):
        if draft["kind"] != "contracted":
            continue
        needed = {0: 3, 1: 1}.get(draft["genus"], 0)
        while branches(i) < needed:
            if rng.randrange(3) == 0:
                edges.append((i, i))
            else:
                edges.append((i, rng.choice(dominant_idx)))

    # contracted components joined by a node must share their image:
    # union-find over contracted-contracted edges, one label per group
    parent = list(range(len(drafts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        if drafts[a]["kind"] == drafts[b]["kind"] == "contracted":
            parent[find(a)] = find(b)
    group_image: dict[int, str] = {}
    for i, draft in enumerate(drafts):
        if draft["kind"] == "contracted":
            root = find(i)
            if root not in group_image:
                group_image[root] = labels.point()
            draft["image"] = group_image[root]

    nodes = []
    for a, b in edges:
        if drafts[a]["kind"] == "contracted":
            image = drafts[a]["image"]
        elif drafts[b]["kind"] == "contracted":
            image = drafts[b]["image"]
        else:
            image = labels.point()
        nodes.append(Node(branches=(drafts[a]["id"], drafts[b]["id"]),
                          image=image))

    components = []
    for draft in drafts:
        if draft["kind"] == "dominant":
            components.append(DominantComponent(
                id=draft["id"], genus=draft["genus"],
                degree=draft["degree"], ramification=draft["ram"],
            ))
        else:
            components.append(ContractedComponent(
                id=draft["id"], genus=draft["genus"], image=draft["image"],
            ))
    graph = StableMapGraph(
        target_genus=target_genus,
        components=tuple(components),
        nodes=tuple(nodes),
    )
    problems = validate(graph)
    if problems:
        raise AssertionError(f"generator produced an invalid graph: {problems}")
    return graph
