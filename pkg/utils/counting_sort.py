"""
Stable counting sort over small integer keys
"""

from typing import Callable, List, Optional, Sequence, TypeVar

from utils.counters import OperationCounter, bump

T = TypeVar("T")


def counting_sort(
    items: Sequence[T],
    key: Callable[[T], int],
    key_range: int,
    counter: Optional[OperationCounter] = None,
    counter_key: str = "counting_sort",
) -> List[T]:
    """
    Sort ``items`` stably by ``key`` in O(len(items) + key_range).

    Args:
        items: the sequence to sort; it is not modified.
        key: maps an item to an integer in ``[0, key_range)``.
        key_range: size of the key domain.
        counter: optional operation counter.
        counter_key: name under which steps are counted.

    Returns:
        A new list, ascending by key, ties kept in input order.
    """
    buckets: List[List[T]] = [[] for _ in range(key_range)]
    for item in items:
        k = key(item)
        if k < 0 or k >= key_range:
            raise ValueError(f"Key {k} outside counting range [0, {key_range})")
        buckets[k].append(item)

    result: List[T] = []
    for bucket in buckets:
        result.extend(bucket)

    bump(counter, counter_key, len(items) + key_range)
    return result
