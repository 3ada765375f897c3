from multieuler import config


def test_config_constants():
    assert config.AVAILABLE_FAMILIES == ("P", "Q", "S", "T")
    assert config.AVAILABLE_METHODS == ("enum", "rec", "diffsys", "grammar", "invseq")
    assert len(config.AVAILABLE_SUITES) == 8
    assert config.ENUM_CAP == {"C": 6, "D": 6, "Cpm": 4, "Dpm": 4}
    assert config.INVSEQ_CAP == 10**7
    assert config.MULTISET_CAP == 12
    assert config.RECURRENCE_DEPTH == 60
    assert config.ROOTS_DEPTH == 25
    assert config.INTERLACE_DEPTH == 15
    assert config.GRAMMAR_DEPTH == 6
    assert config.SERIES_ORDER == 30
    assert config.JSON_SCHEMA_VERSION == 1
    assert config.CSV_HEADER == ("family", "n", "k", "value")


def test_every_suite_has_a_default_depth():
    assert set(config.DEFAULT_SUITE_DEPTH) == set(config.AVAILABLE_SUITES)


def test_cross_depths_stay_within_caps():
    for family, depth in config.CROSS_ENUM_DEPTH.items():
        assert depth <= config.ENUM_CAP[config.WORD_FAMILY[family]]
