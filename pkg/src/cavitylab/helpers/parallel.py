"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from cavitylab.exceptions import InvalidParamsError

__all__ = [
    'default_threads',
    'ordered_map',
]

T_Item = TypeVar('T_Item')
T_Result = TypeVar('T_Result')


def default_threads() -> int:
    return os.cpu_count() or 1


def ordered_map(
    function: Callable[[T_Item], T_Result],
    items: Iterable[T_Item],
    *,
    threads: int | None = None,
) -> list[T_Result]:
    """
    Applies a function to every item, using up to `threads` worker threads (default: number of logical cores), and
    returns the results in input order regardless of completion order.

    The function must not depend on shared mutable state. Exceptions raised by the function are re-raised here.
    """
    if threads is None:
        threads = default_threads()
    if threads < 1:
        raise InvalidParamsError(parameter='threads', reason='The number of threads must be at least 1.')

    item_list = list(items)
    if threads == 1 or len(item_list) <= 1:
        return [function(item) for item in item_list]

    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, item_list))
