"""Input formats: FASTA sequence files and plain-text substitution matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .scoring import Alphabet


class MalformedFasta(ValueError):
    """The FASTA input violates the format or the configured alphabet."""


class MalformedMatrix(ValueError):
    """The substitution-matrix file violates the expected layout."""


@dataclass(frozen=True)
class FastaRecord:
    """One FASTA record.

    id is the first whitespace-delimited token of the header, description the
    remainder; sequence is the concatenation of the residue lines, upper-cased.
    """

    id: str
    description: str
    sequence: str


def _as_text(data) -> str:
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, (bytes, bytearray)):
        try:
            return bytes(data).decode("ascii")
        except UnicodeDecodeError as exc:
            raise MalformedFasta(f"input is not ASCII text: {exc}") from None
    return str(data)


def parse_fasta(data, alphabet: Alphabet | None = None) -> list[FastaRecord]:
    """Parse FASTA text from bytes, a string, or a readable stream.

    Blank lines are ignored and both LF and CRLF endings are accepted.
    Sequences are case-folded to upper case. Raises MalformedFasta on residue
    data before the first header, an empty sequence, a header without an id,
    or (when an alphabet is given) a residue outside it.
    """
    text = _as_text(data)
    records: list[FastaRecord] = []
    current: list[str] | None = None
    header: tuple[str, str] | None = None

    def flush() -> None:
        if header is None:
            return
        seq = "".join(current or ())
        if not seq:
            raise MalformedFasta(f"record {header[0]!r} has an empty sequence")
        records.append(FastaRecord(header[0], header[1], seq))

    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            flush()
            parts = line[1:].strip().split(None, 1)
            if not parts:
                raise MalformedFasta("header line without an id")
            header = (parts[0], parts[1] if len(parts) > 1 else "")
            current = []
        else:
            if header is None:
                raise MalformedFasta("residue data before the first '>' header")
            current.append(line.upper())
    flush()

    if alphabet is not None:
        allowed = set(alphabet.symbols)
        for rec in records:
            for ch in rec.sequence:
                if ch not in allowed:
                    raise MalformedFasta(
                        f"record {rec.id!r} contains residue {ch!r} outside "
                        f"alphabet {alphabet.symbols!r}"
                    )
    return records


def parse_matrix(data) -> tuple[Alphabet, tuple[tuple[int, ...], ...]]:
    """Parse a substitution-matrix file.

    Line 1 lists the single-character alphabet symbols separated by spaces;
    the next |alphabet| lines each hold |alphabet| integers, row order
    matching the symbol order. Returns the alphabet (no wildcard) and the
    matrix rows.
    """
    text = _as_text(data)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedMatrix("matrix file is empty")
    symbols = lines[0].split()
    for s in symbols:
        if len(s) != 1:
            raise MalformedMatrix(f"alphabet entry {s!r} is not a single character")
    if len(set(symbols)) != len(symbols):
        raise MalformedMatrix("alphabet symbols must be unique")
    n = len(symbols)
    if len(lines) - 1 != n:
        raise MalformedMatrix(
            f"expected {n} matrix rows for {n} symbols, found {len(lines) - 1}"
        )
    rows = []
    for ln in lines[1:]:
        cells = ln.split()
        if len(cells) != n:
            raise MalformedMatrix(f"matrix row {ln!r} does not have {n} entries")
        try:
            rows.append(tuple(int(c) for c in cells))
        except ValueError:
            raise MalformedMatrix(f"matrix row {ln!r} contains a non-integer") from None
    return Alphabet("".join(symbols)), tuple(rows)
