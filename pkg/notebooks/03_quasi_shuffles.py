"""Shuffle, stuffle, diamond and LDIAG from one recursion."""
from fdsemi.oracles import interleavings_with_merges
from fdsemi.quasi_shuffle import STUFFLE, diamond, ldiag_up, quasi_shuffle, shuffle, stuffle

print(shuffle("x0 x1", "x1"))
print(stuffle("2", "3"))
print(stuffle("1", "1,1"))
print(diamond("2/1", "3/0"))
print(ldiag_up("[x1^2]", "[x1]"))

# %% the recursion against brute-force interleavings with merges
u, v = (1, 2), (3, 1)
fast = {tuple(w): int(c) for w, c in quasi_shuffle(u, v, STUFFLE).items()}
slow = dict(interleavings_with_merges(u, v, lambda a, b: a + b))
print(fast == slow, len(fast), "distinct words")
