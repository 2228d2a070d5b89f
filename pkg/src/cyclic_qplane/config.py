"""Configuration for verification sweeps."""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import ConfigError

DEFAULT_ORDERS: tuple[int, ...] = tuple(range(2, 9))

_RANGE = re.compile(r"^(\d+)\s*(?:\.\.|-)\s*(\d+)$")


def is_odd_prime(n: int) -> bool:
    """Whether ``n`` is an odd prime."""
    if n < 3 or n % 2 == 0:
        return False
    return all(n % p for p in range(3, int(n**0.5) + 1, 2))


@dataclass
class VerifyConfig:
    """Options of one verification run."""

    orders: tuple[int, ...] = DEFAULT_ORDERS
    only: frozenset[str] | None = None
    exhaustive_limit: int = 5
    sample_size: int = 200
    seed: int = 0
    jobs: int = 1

    def asserts_at(self, order: int) -> bool:
        """Whether root-of-unity sensitive identities are asserted at ``order``.

        They are asserted at odd primes, where ``q^{-2}`` is again a primitive
        N-th root, and only recorded elsewhere.
        """
        return is_odd_prime(order)

    def wants(self, identity_id: str) -> bool:
        return self.only is None or identity_id in self.only


def parse_orders(text: str) -> tuple[int, ...]:
    """Parse an order list such as ``3``, ``3,5,7``, ``2..8``, ``2-8`` or ``2..4,7``.

    Returns:
        Sorted, de-duplicated orders.

    Raises:
        ConfigError: On a malformed token, an empty range or any N < 2.
    """
    orders: set[int] = set()
    for raw in text.split(","):
        token = raw.strip()
        if not token:
            raise ConfigError(f"empty entry in order list '{text}'")
        match = _RANGE.match(token)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            if low > high:
                raise ConfigError(f"empty order range '{token}'")
            orders.update(range(low, high + 1))
        elif token.isdigit():
            orders.add(int(token))
        else:
            raise ConfigError(f"invalid order '{token}'; use N, N,M,... or N..M")
    too_small = sorted(n for n in orders if n < 2)
    if too_small:
        raise ConfigError(f"order N must be >= 2, got {too_small[0]}")
    return tuple(sorted(orders))


def parse_only(text: str | None) -> frozenset[str] | None:
    """Split a comma-separated identity filter; None or blank means no filter."""
    if text is None or not text.strip():
        return None
    return frozenset(part.strip() for part in text.split(",") if part.strip())


def build_config(
    orders: str | None = None,
    only: str | None = None,
    *,
    known_ids: Iterable[str] | None = None,
    seed: int = 0,
    jobs: int = 1,
    exhaustive_limit: int = 5,
    sample_size: int = 200,
) -> VerifyConfig:
    """Build a validated :class:`VerifyConfig` from option strings.

    Args:
        orders: Order list for :func:`parse_orders`; None means 2..8.
        only: Comma-separated identity ids to run; None runs everything.
        known_ids: Registry ids that ``only`` is checked against.
        seed: Seed for sampled sweeps.
        jobs: Worker processes, at least 1.
        exhaustive_limit: Largest N with exhaustive triple sweeps.
        sample_size: Samples per sweep above ``exhaustive_limit``.

    Raises:
        ConfigError: On any invalid value.
    """
    errors: list[str] = []
    selected = parse_only(only)
    if selected is not None and known_ids is not None:
        unknown = sorted(selected - set(known_ids))
        if unknown:
            errors.append(f"unknown identity id(s): {', '.join(unknown)}")
    if jobs < 1:
        errors.append(f"jobs must be >= 1, got {jobs}")
    if sample_size < 1:
        errors.append(f"sample size must be >= 1, got {sample_size}")
    if exhaustive_limit < 2:
        errors.append(f"exhaustive limit must be >= 2, got {exhaustive_limit}")
    if errors:
        raise ConfigError("; ".join(errors))

    return VerifyConfig(
        orders=parse_orders(orders) if orders is not None else DEFAULT_ORDERS,
        only=selected,
        exhaustive_limit=exhaustive_limit,
        sample_size=sample_size,
        seed=seed,
        jobs=jobs,
    )
