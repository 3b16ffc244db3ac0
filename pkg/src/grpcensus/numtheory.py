"""Trial-division arithmetic; inputs stay below the 4096 order cap."""


def prime_factorization(n: int) -> list[tuple[int, int]]:
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in prime_factorization(n)]


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factorization(n) == [(n, 1)]


def totient(k: int) -> int:
    result = k
    for p, _ in prime_factorization(k):
        result -= result // p
    return result


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]
