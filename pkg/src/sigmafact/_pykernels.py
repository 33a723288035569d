"""Pure-Python versions of the compiled kernels; same signatures and results."""


def prepare(table):
    return [list(map(int, row)) for row in table]


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def closure(tab, seed, gens, start):
    gens = [int(g) for g in gens]
    later = gens[start:]
    seen = set(_bits(seed))
    frontier = []
    for x in sorted(seen):
        row = tab[x]
        for g in later:
            y = row[g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    while frontier:
        nxt = []
        for x in frontier:
            row = tab[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    mask = 0
    for y in seen:
        mask |= 1 << y
    return mask


def set_product(tab, left, right):
    right = [int(b) for b in right]
    hit = set()
    for a in left:
        row = tab[int(a)]
        hit.update(row[b] for b in right)
    mask = 0
    for y in hit:
        mask |= 1 << y
    return mask
