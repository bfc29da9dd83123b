import random

from nanowords import Alphabet, compute_fingerprint, nanoword_from_pattern
from nanowords.fingerprint import default_betas, format_fingerprint

from conftest import ALPHABETS, random_nanoword


def test_default_betas_are_orbit_unions(al_mixed):
    betas = default_betas(al_mixed)
    assert frozenset() in betas and frozenset(al_mixed.letters) in betas
    for beta in betas:
        assert all(al_mixed.tau(a) in beta for a in beta)
    assert len(betas) == 4


def test_fingerprint_separates_and_names_field(al_id2):
    w = nanoword_from_pattern(al_id2, "ABAB", {"A": "a", "B": "b"})
    v = nanoword_from_pattern(al_id2, "AABB", {"A": "a", "B": "b"})
    f1, f2 = compute_fingerprint(w), compute_fingerprint(v)
    assert f1.first_difference(f2) == "gamma"
    assert f1 != f2
    assert f1 == compute_fingerprint(w)


def test_fingerprint_key_is_isomorphism_invariant():
    rng = random.Random(8)
    for al in ALPHABETS:
        for _ in range(10):
            w = random_nanoword(al, rng.randrange(0, 4), rng)
            names = list(w.letters)
            shuffled = names[:]
            rng.shuffle(shuffled)
            rename = dict(zip(names, shuffled))
            from nanowords import Nanoword
            v = Nanoword(al, [rename[x] for x in w.word],
                         {rename[x]: w.proj[x] for x in names})
            assert compute_fingerprint(w).key() == compute_fingerprint(v).key()


def test_fingerprint_report_renders(al_free2):
    w = nanoword_from_pattern(al_free2, "ABAB", {"A": "a", "B": "b"})
    lines = format_fingerprint(compute_fingerprint(w))
    text = "\n".join(lines)
    assert "gamma:  z_a z_b z_a^-1 z_b^-1" in text
    assert "lambda:" in text and "charseq" in text
