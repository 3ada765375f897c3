import pytest

from multieuler.exceptions import ValidationException
from multieuler.model.word import InvSeq, Word


class TestWord:
    """Signed words and their one-line form."""

    def test_serialize(self):
        word = Word((2, -1, 1))
        assert word.serialize() == "2 -1 1"
        assert len(word) == 3

    def test_zero_entry_rejected(self):
        with pytest.raises(ValidationException, match="nonzero"):
            Word((1, 0, 2))

    def test_entries_normalized_to_tuple(self):
        assert Word([1, 1]).entries == (1, 1)


class TestInvSeq:
    """s-inversion sequences and their ascent count."""

    @pytest.mark.parametrize(
        "s, e, asc",
        [
            ((1, 4), (0, 0), 0),
            ((1, 4), (0, 3), 1),
            ((2, 2), (1, 0), 1),
            ((2, 4), (1, 3), 2),
            ((2, 4), (1, 2), 1),
        ],
    )
    def test_ascents(self, s, e, asc):
        assert InvSeq(s, e).asc == asc

    def test_length_mismatch(self):
        with pytest.raises(ValidationException, match="same length"):
            InvSeq((1, 2), (0,))

    def test_entry_out_of_range(self):
        with pytest.raises(ValidationException, match="0 <= e_i < s_i"):
            InvSeq((1, 2), (0, 2))

    def test_nonpositive_s(self):
        with pytest.raises(ValidationException, match="positive"):
            InvSeq((0,), (0,))
