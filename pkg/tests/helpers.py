from projschub.polyring import Family, Polynomial


def poly(family, terms):
    """``{(idx, idx, ...): coeff}`` with repeated indices meaning powers."""
    out = []
    for key, c in terms.items():
        exps = {}
        for idx in key:
            exps[idx] = exps.get(idx, 0) + 1
        out.append((exps, c))
    return Polynomial.from_terms(family, out)


def B(terms):
    return poly(Family.BETA, terms)


def T(terms):
    return poly(Family.T, terms)


def dense_set(points, width):
    from projschub.polyring import to_dense

    return {to_dense(v, width) for v in points}
