"""Tests for note-name parsing, rendering, and the enharmonic tables."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tuningspaces import (
    A_ROOTED,
    C_ROOTED,
    NoteName,
    ParseError,
    enharmonic_spellings,
    parse_note_name,
    render_note_name,
)

# The twelve rows of the C-rooted integer table, transcribed as ASCII.
C_ROOTED_TABLE = {
    0: ("B#", "C", "Dbb"),
    1: ("C#", "Db"),
    2: ("C##", "D", "Ebb"),
    3: ("D#", "Eb"),
    4: ("D##", "E", "Fb"),
    5: ("E#", "F", "Gbb"),
    6: ("F#", "Gb"),
    7: ("F##", "G", "Abb"),
    8: ("G#", "Ab"),
    9: ("G##", "A", "Bbb"),
    10: ("A#", "Bb"),
    11: ("A##", "B", "Cb"),
}

ALL_TABLED_SPELLINGS = [
    (spelling, cls) for cls, row in C_ROOTED_TABLE.items() for spelling in row
]


class TestParse:
    def test_integer_convention_examples(self):
        assert parse_note_name("C", C_ROOTED) == 0
        assert parse_note_name("Fx", C_ROOTED) == 7
        assert parse_note_name("Dbb", C_ROOTED) == 0

    def test_class_convention_example(self):
        assert parse_note_name("C", A_ROOTED) == 3

    @pytest.mark.parametrize("spelling,cls", ALL_TABLED_SPELLINGS)
    def test_every_tabled_spelling_c_rooted(self, spelling, cls):
        assert parse_note_name(spelling, C_ROOTED) == cls

    @pytest.mark.parametrize("spelling,cls", ALL_TABLED_SPELLINGS)
    def test_every_tabled_spelling_a_rooted(self, spelling, cls):
        assert parse_note_name(spelling, A_ROOTED) == (cls + 3) % 12

    def test_unicode_accidentals(self):
        assert parse_note_name("F♯", C_ROOTED) == 6
        assert parse_note_name("B♭", C_ROOTED) == 10
        assert parse_note_name("F\U0001d12a", C_ROOTED) == 7
        assert parse_note_name("D♭♭", C_ROOTED) == 0
        assert parse_note_name("E\U0001d12b", C_ROOTED) == 2
        assert parse_note_name("C♯♯", C_ROOTED) == 2

    def test_letters_case_insensitive(self):
        assert parse_note_name("c#", C_ROOTED) == parse_note_name("C#", C_ROOTED)
        assert parse_note_name("gb", C_ROOTED) == 6
        # a lone lowercase b is the letter B, since nothing precedes it
        assert parse_note_name("b", C_ROOTED) == 11
        assert parse_note_name("bb", C_ROOTED) == 10
        assert parse_note_name("bbb", C_ROOTED) == 9

    def test_accidentals_case_sensitive(self):
        with pytest.raises(ParseError):
            parse_note_name("CB", C_ROOTED)  # uppercase B is never an accidental
        with pytest.raises(ParseError):
            parse_note_name("CX", C_ROOTED)  # double sharp x is lowercase only

    @pytest.mark.parametrize("bad,position", [("H", 0), ("#C", 0), ("C###", 1), ("", 0)])
    def test_rejects_with_position(self, bad, position):
        with pytest.raises(ParseError) as err:
            parse_note_name(bad, C_ROOTED)
        assert err.value.position == position

    def test_all_35_grammar_combinations_parse(self):
        # Four of them (E##, B##, Cbb, Fbb) never appear in the table, but
        # the grammar is total: letter plus accidental always has a class.
        ascii_accidentals = ["", "#", "##", "b", "bb"]
        offsets = {"": 0, "#": 1, "##": 2, "b": -1, "bb": -2}
        base = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
        combos = list(itertools.product("ABCDEFG", ascii_accidentals))
        assert len(combos) == 35
        for letter, accidental in combos:
            expected = (base[letter] + offsets[accidental]) % 12
            assert parse_note_name(letter + accidental, C_ROOTED) == expected

    def test_exhaustive_fuzz_short_strings_never_crash(self):
        alphabet = "ABGHabgxh#♯♭\U0001d12a124@ "
        for length in (2, 3, 4):
            for chars in itertools.product(alphabet, repeat=length):
                text = "".join(chars)
                try:
                    result = parse_note_name(text, C_ROOTED)
                except ParseError:
                    continue
                assert 0 <= result <= 11

    @given(st.text(max_size=6))
    def test_random_text_parses_or_raises_parse_error(self, text):
        try:
            result = parse_note_name(text, A_ROOTED)
        except ParseError:
            return
        assert 0 <= result <= 11


class TestRender:
    def test_tuning_note_renders_as_a(self):
        assert render_note_name(0, A_ROOTED) == "A"

    def test_class_three_is_c(self):
        assert render_note_name(3, A_ROOTED) == "C"

    def test_sharp_fallback(self):
        assert render_note_name(1, A_ROOTED) == "A#"

    def test_c_rooted_sequence(self):
        names = [render_note_name(c, C_ROOTED) for c in range(12)]
        assert names == ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"]

    def test_a_rooted_sequence(self):
        names = [render_note_name(c, A_ROOTED) for c in range(12)]
        assert names == ["A", "A#", "B", "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#"]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            render_note_name(12, C_ROOTED)
        with pytest.raises(ValueError):
            render_note_name(-1, A_ROOTED)

    @pytest.mark.parametrize("convention", [A_ROOTED, C_ROOTED])
    def test_round_trip(self, convention):
        for cls in range(12):
            assert parse_note_name(render_note_name(cls, convention), convention) == cls


class TestEnharmonicSpellings:
    def test_row_zero_c_rooted(self):
        row = enharmonic_spellings(0, C_ROOTED)
        assert [name.ascii for name in row] == ["B#", "C", "Dbb"]
        assert [str(name) for name in row] == ["B♯", "C", "D♭♭"]

    def test_row_six_c_rooted(self):
        row = enharmonic_spellings(6, C_ROOTED)
        assert [name.ascii for name in row] == ["F#", "Gb"]

    def test_every_row_has_two_or_three_spellings(self):
        for convention in (A_ROOTED, C_ROOTED):
            for cls in range(12):
                assert len(enharmonic_spellings(cls, convention)) in (2, 3)

    def test_rows_match_frozen_table(self):
        for cls, row in C_ROOTED_TABLE.items():
            assert tuple(n.ascii for n in enharmonic_spellings(cls, C_ROOTED)) == row

    def test_union_covers_each_tabled_spelling_once(self):
        seen = []
        for cls in range(12):
            seen.extend(enharmonic_spellings(cls, C_ROOTED))
        assert len(seen) == 31
        assert len(set(seen)) == 31

    def test_conventions_hold_the_same_rows_rotated(self):
        for cls in range(12):
            assert enharmonic_spellings(cls, A_ROOTED) == enharmonic_spellings(
                (cls - 3) % 12, C_ROOTED
            )


class TestConventionOffset:
    def test_every_spelling_differs_by_three(self):
        for spelling, _ in ALL_TABLED_SPELLINGS:
            a = parse_note_name(spelling, A_ROOTED)
            c = parse_note_name(spelling, C_ROOTED)
            assert c == (a - 3) % 12


class TestNoteName:
    def test_validation(self):
        with pytest.raises(ValueError):
            NoteName("H", 0)
        with pytest.raises(ValueError):
            NoteName("C", 3)

    def test_ascii_and_unicode_forms(self):
        name = NoteName("F", 2)
        assert name.ascii == "F##"
        assert str(name) == "F\U0001d12a"
        assert NoteName("D", -2).ascii == "Dbb"
