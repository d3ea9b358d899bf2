"""Numbered musical notation to Standard MIDI File compiler."""

from ._core import (
    CountMismatchError,
    DecodeError,
    EmptyInputError,
    NmnError,
    NmnRangeError,
    NmnSyntaxError,
    NotFoundError,
    TuneToken,
    __version__,
    compile,
    decode_vlq,
    encode_vlq,
    get_song,
    hex_dump,
    list_songs,
    map_note,
    parse_tempo_list,
    parse_tune_list,
    read_smf,
    render_tune_list,
    validate,
)

__all__ = [
    "CountMismatchError",
    "DecodeError",
    "EmptyInputError",
    "NmnError",
    "NmnRangeError",
    "NmnSyntaxError",
    "NotFoundError",
    "TuneToken",
    "__version__",
    "compile",
    "decode_vlq",
    "encode_vlq",
    "get_song",
    "hex_dump",
    "list_songs",
    "map_note",
    "parse_tempo_list",
    "parse_tune_list",
    "read_smf",
    "render_tune_list",
    "validate",
]
