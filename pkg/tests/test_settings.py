# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
import tomlkit
from confz import DataSource

from deadcore.settings import (CONFIG_FILENAME, AnalysisConfig, RSettings, SolverConfig, TomlSource,
                               _createConfigToml, _validateSection)


# ******************************************************************************
class TestPreferences:
    # **************************************************************************
    def test_DeNovo(self):
        tdoc = tomlkit.loads(tomlkit.dumps(_createConfigToml()))
        assert set(tdoc) == {'Main', 'Solver', 'Analysis'}
        assert tdoc['Solver']['Scheme'] == 'minmax'
        assert tdoc['Analysis']['AnchorCount'] == 8

    # **************************************************************************
    def test_InvalidFieldsReset(self):
        tdoc = _createConfigToml()
        tdoc['Analysis']['AnchorCount'] = 1000
        section = _validateSection(tdoc, 'Analysis', AnalysisConfig)
        assert section.AnchorCount == 8
        assert tdoc['Analysis']['AnchorCount'] == 8

    # **************************************************************************
    def test_ValidSectionKept(self):
        tdoc = _createConfigToml()
        tdoc['Solver']['TolUpdate'] = 1e-6
        assert _validateSection(tdoc, 'Solver', SolverConfig).TolUpdate == 1e-6

    # **************************************************************************
    def test_Threads(self, monkeypatch):
        sources = DataSource(data={'Main': {}, 'Solver': {'Threads': 3}, 'Analysis': {}})
        with RSettings.change_config_sources(sources):
            settings = RSettings()
        monkeypatch.delenv('DEADCORE_THREADS', raising=False)
        assert settings.threads() == 3
        monkeypatch.setenv('DEADCORE_THREADS', '2')
        assert settings.threads() == 2
        monkeypatch.setenv('DEADCORE_THREADS', '0')
        assert settings.threads() >= 1

    # **************************************************************************
    def test_DataSource(self):
        data = {'Main': {'LogLevel': 'DEBUG'}, 'Solver': {'TolUpdate': 1e-8}, 'Analysis': {}}
        with RSettings.change_config_sources(DataSource(data=data)):
            settings = RSettings()
        assert settings.Main.LogLevel == 'DEBUG'
        assert settings.Solver.TolUpdate == 1e-8
        assert settings.Analysis.AnchorCount == 8

    # **************************************************************************
    def test_TomlSource(self, tmp_path):
        tomlFile = tmp_path / CONFIG_FILENAME
        with RSettings.change_config_sources(TomlSource(tomlFile=tomlFile)):
            settings = RSettings()
        assert tomlFile.is_file()
        assert settings.Solver.ResidualInterval == 10

        tdoc = tomlkit.loads(tomlFile.read_text(encoding='utf-8'))
        tdoc['Analysis']['AnchorCount'] = 16
        tdoc['Solver']['Threads'] = -1
        tomlFile.write_text(tomlkit.dumps(tdoc), encoding='utf-8')
        with RSettings.change_config_sources(TomlSource(tomlFile=tomlFile)):
            settings = RSettings()
        assert settings.Analysis.AnchorCount == 16
        assert settings.Solver.Threads == 0

# ******************************************************************************
