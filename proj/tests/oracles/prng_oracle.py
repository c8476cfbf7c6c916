"""Independent evaluation of the xorshift64* recurrence and rejection mapping.

Used once to freeze the golden constants asserted in tests/unit/test_permute.cpp.
"""
M = (1 << 64) - 1


def xorshift_star(state):
    state ^= state >> 12
    state ^= (state << 25) & M
    state ^= state >> 27
    return state, (state * 2685821657736338717) & M


def next_index(state, n):
    limit = (1 << 64) - ((1 << 64) % n)  # largest multiple of n
    while True:
        state, x = xorshift_star(state)
        if x < limit:
            return state, x % n + 1


if __name__ == "__main__":
    s = 1
    outs = []
    for _ in range(3):
        s, x = xorshift_star(s)
        outs.append(hex(x))
    print("seed=1 raw outputs:", outs)
    s = 1
    idx = []
    for _ in range(8):
        s, i = next_index(s, 10)
        idx.append(i)
    print("seed=1 N=10 indices:", idx, "state after:", hex(s))
    # 30 cumulative swaps on 100 words, seed 42: final permutation head
    s = 42
    perm = list(range(100))
    for _ in range(30):
        s, a = next_index(s, 100)
        s, b = next_index(s, 100)
        perm[a - 1], perm[b - 1] = perm[b - 1], perm[a - 1]
    print("seed=42 N=100 30 swaps perm[:10]:", perm[:10])
