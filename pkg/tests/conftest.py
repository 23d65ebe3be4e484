import functools
import time

from hypothesis import settings, strategies as st

from ribbonschur.compositions import composition_of

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def comps(draw, min_size=1, max_size=8):
    n = draw(st.integers(min_size, max_size))
    S = draw(st.sets(st.integers(1, n - 1))) if n > 1 else set()
    return composition_of(sorted(S), n)


@st.composite
def perms(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


def brute_coarsenings(beta):
    """Every way to cut beta's parts into consecutive blocks, by recursion."""
    beta = tuple(beta)
    if not beta:
        return [()]
    out = []
    for i in range(1, len(beta) + 1):
        for rest in brute_coarsenings(beta[i:]):
            out.append((sum(beta[:i]),) + rest)
    return out




# ---------------------------------------------------------------- acceptance reporting

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def acceptance(number: int, title: str):
    """Record a PASS/FAIL line for an acceptance criterion and print it."""
    def wrap(fn):
        @functools.wraps(fn)
        def test(*args, **kwargs):
            start = time.perf_counter()
            ok = False
            try:
                fn(*args, **kwargs)
                ok = True
            finally:
                elapsed = f"{time.perf_counter() - start:.2f}s"
                ACCEPTANCE[number] = (title, ok, elapsed)
                print(f"\nACCEPTANCE {number:2d} {'PASS' if ok else 'FAIL'} ({elapsed}) {title}")
        return test
    return wrap


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, elapsed = ACCEPTANCE[number]
        terminalreporter.write_line(f"{number:2d} {'PASS' if ok else 'FAIL'} ({elapsed}) {title}")
