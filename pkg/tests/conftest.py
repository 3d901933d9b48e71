import itertools

from suffixlab.strings import TERMINATOR, Alphabet, Str


def all_strings(n, sigma):
    """Every length-n string over symbols 1..sigma."""
    alphabet = Alphabet(sigma)
    for symbols in itertools.product(range(1, sigma + 1), repeat=n):
        yield Str(symbols, alphabet)


def assert_leaf_paths(tree):
    """Every root-to-leaf path must spell its suffix plus the terminator."""
    source = tree.source.symbols
    for j in tree.leaves:
        expected = source[j - 1 :] + (TERMINATOR,)
        assert tree.path_symbols(j) == expected, f"leaf {j} of {tree.source!r}"
