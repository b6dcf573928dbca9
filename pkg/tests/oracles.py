"""Independent reference computations used by the tests.

None of these import the code paths they check: plain loops, dicts and
``fractions.Fraction`` only.
"""

from fractions import Fraction


def ccd_scalar(A):
    """Threshold, per-token scores and flags from nested lists ``A[h][i]``."""
    H, N = len(A), len(A[0])
    scores = []
    for i in range(N):
        acc = 0.0
        for h in range(H):
            acc += A[h][i]
        scores.append(acc)
    grand = 0.0
    for h in range(H):
        for i in range(N):
            grand += A[h][i]
    T = grand / N
    return T, scores, [s >= T for s in scores]


def _count(items):
    out = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return out


def _grams(words, n):
    return [" ".join(words[i:i + n]) for i in range(len(words) - n + 1)]


def _f1(p, r):
    if p == 0 and r == 0:
        return Fraction(0)
    return 2 * p * r / (p + r)


def sari_bruteforce(source, output, references):
    """SARI on whitespace-split, lowercased strings; returns (overall, add, keep, delete) on 0-100."""
    src = source.lower().split()
    out = output.lower().split()
    refs = [r.lower().split() for r in references]
    m = len(refs)
    add_total = keep_total = del_total = Fraction(0)
    for n in range(1, 5):
        cs = _count(_grams(src, n))
        co = _count(_grams(out, n))
        cr = {}
        for r in refs:
            for g, c in _count(_grams(r, n)).items():
                cr[g] = cr.get(g, 0) + c

        sys_added = [g for g in co if g not in cs]
        ref_added = [g for g in cr if g not in cs]
        correct = [g for g in sys_added if g in ref_added]
        p = Fraction(len(correct), len(sys_added)) if sys_added else Fraction(0)
        r = Fraction(len(correct), len(ref_added)) if ref_added else Fraction(0)
        add_total += _f1(p, r)

        kept_sys = {g: min(cs[g], co[g]) * m for g in cs if g in co}
        kept_ref = {g: min(cs[g] * m, cr[g]) for g in cs if g in cr}
        p_num = Fraction(0)
        r_num = Fraction(0)
        for g, k in kept_sys.items():
            good = min(k, cr.get(g, 0))
            if good > 0:
                p_num += Fraction(good, k)
                r_num += Fraction(good, kept_ref[g])
        p = p_num / len(kept_sys) if kept_sys else Fraction(0)
        r = r_num / len(kept_ref) if kept_ref else Fraction(0)
        keep_total += _f1(p, r)

        deleted = {g: (cs[g] - co.get(g, 0)) * m for g in cs if cs[g] > co.get(g, 0)}
        d_num = Fraction(0)
        for g, d in deleted.items():
            good = d - cr.get(g, 0)
            if good > 0:
                d_num += Fraction(good, d)
        del_total += d_num / len(deleted) if deleted else Fraction(0)

    add = add_total * 100 / 4
    keep = keep_total * 100 / 4
    delete = del_total * 100 / 4
    return (add + keep + delete) / 3, add, keep, delete


def fkgl_direct(n_sentences, n_words, n_syllables):
    return 0.39 * (n_words / n_sentences) + 11.8 * (n_syllables / n_words) - 15.59


def confusion(pred, gold):
    tp = fp = fn = tn = 0
    for p, g in zip(pred, gold):
        if p and g:
            tp += 1
        elif p:
            fp += 1
        elif g:
            fn += 1
        else:
            tn += 1
    prec = tp / (tp + fp) if tp + fp else 0.0
    rec = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * prec * rec / (prec + rec) if prec + rec else 0.0
    return {"accuracy": 100 * (tp + tn) / len(gold), "precision": 100 * prec,
            "recall": 100 * rec, "f1": 100 * f1}


def deletion_enumeration(tokens, spans, min_len=2):
    """All removal/extraction token tuples for the proper spans of a tree."""
    n = len(tokens)
    removal, extraction = set(), set()
    for start, end in spans:
        if (start, end) == (0, n) or end - start < min_len:
            continue
        removal.add(tuple(tokens[:start] + tokens[end:]))
        extraction.add(tuple(tokens[start:end]))
    return removal, extraction
