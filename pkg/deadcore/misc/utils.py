# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Collection of miscellaneous helper functions.

This module contains assorted helper functions which do not yet have a
separate module: file name slugs, number formatting for the CSV outputs and
the canonical JSON dump used for configuration hashes.
"""
# ******************************************************************************
import hashlib
import string
import unicodedata
from datetime import timedelta
from typing import Any

import humanize
import numpy as np
import orjson

# ******************************************************************************
MinimumValidChars: str = "-_.()" + string.ascii_letters + string.digits
"""Set of characters which can be universally used in names and titles."""
FilenameCharLimit: int = 255
"""Upper limit to filename length."""
SignificantDigits: int = 17
"""Digits written for every real number in CSV output (round-trips a double)."""


# ******************************************************************************
def slugify(name: str, whitelist: str = MinimumValidChars, replace: str = ' ') -> str:
    """Reduce given string to acceptable set of characters

    .. note::

        A *slug* is a short label for something, containing only letters, numbers,
        underscores or hyphens (as in `Django` docs).

    The characters matching the `replace` string characters are replaced,
    followed by *decomposed normalization* to `ASCII` characters,
    then the whitelisted characters are filtered
    and lastly the name length is truncated to :py:const:`FilenameCharLimit`.

    Args:
        name (str): the string to *slugify*.
        whitelist (str): the set of allowed characters
        replace (str): the characters to be replaced with *hyphen*
    """
    for r in replace:
        name = name.replace(r, '-')

    slug = unicodedata.normalize('NFKD', name).encode('ASCII', 'ignore').decode()
    slug = ''.join(c for c in slug if c in whitelist)

    return slug[:FilenameCharLimit]


# ******************************************************************************
def formatNumber(x: float) -> str:
    """Format a real with :py:const:`SignificantDigits` significant digits"""
    return f'{float(x):.{SignificantDigits}g}'


# ******************************************************************************
def _jsonDefault(item: Any) -> Any:
    if isinstance(item, np.ndarray):
        return item.tolist()
    if isinstance(item, (np.floating, np.integer, np.bool_)):
        return item.item()
    raise TypeError(f'{type(item)} is not JSON serializable')


def canonicalJson(obj: Any, indent: bool = False) -> bytes:
    """Serialize to JSON bytes with sorted keys, so equal inputs give equal bytes"""
    option = orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY
    if indent:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(obj, default=_jsonDefault, option=option)


# ******************************************************************************
def configHash(config: Any) -> str:
    """SHA-256 hex digest of the canonical JSON form of a configuration"""
    return hashlib.sha256(canonicalJson(config)).hexdigest()


# ******************************************************************************
def elapsedText(seconds: float) -> str:
    """Human readable duration for log messages"""
    return humanize.precisedelta(timedelta(seconds=seconds), minimum_unit='milliseconds')


# ******************************************************************************
