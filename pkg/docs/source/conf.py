# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
# ******************************************************************************
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parents[2]))

project = 'DeadCore'
copyright = '2025, RoXimn'
author = 'RoXimn'
release: str = '0.1.0'
master_doc: str = 'index'
language: str = 'en-US'
modindex_common_prefix: list[str] = ['deadcore.']

# -- Extensions ------------------------------------------------------------------
extensions: list[str] = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
    'sphinx.ext.todo',
    'sphinxcontrib.autodoc_pydantic',
]
napoleon_google_docstring = True
napoleon_numpy_docstring = False
todo_include_todos: bool = True

autodoc_member_order = 'bysource'
autodoc_typehints = 'description'

# Numba dispatchers document as plain functions
autodoc_default_options = {
    'members': True,
    'undoc-members': False,
}

source_suffix: str = '.rst'
templates_path = ['_templates']
exclude_patterns: list[str] = []

# -- Pydantic models ------------------------------------------------------------
autodoc_pydantic_model_show_json = False
autodoc_pydantic_model_show_config_summary = False
autodoc_pydantic_model_show_validator_summary = False
autodoc_pydantic_config_members = False
autodoc_pydantic_settings_signature_prefix = 'Settings'
autodoc_pydantic_model_signature_prefix = 'Model'
autodoc_pydantic_field_list_validators = False

# -- HTML output ----------------------------------------------------------------
html_theme = 'sphinx_book_theme'
html_theme_options = {
    'navigation_with_keys': False,
    'show_toc_level': 2,
}
html_title = 'DeadCore'
html_show_sourcelink = False
