from typing import Any, Iterable, List, Mapping, Optional, TextIO, Tuple

import os
import glob
import json
from fractions import Fraction

from ..fields import ComplexEmbedding, FieldElement
from ..orders import NaturalOrder
from .coset import CosetCodeword, InnerCodebook


FORMATS = ("text", "records")


def _exact(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    return value


def _coordinates(x: FieldElement) -> List[Any]:
    return [_exact(c) for c in x.coordinates]


def codeword_record(index: int,
                    codeword: CosetCodeword,
                    order: NaturalOrder,
                    codebook: InnerCodebook,
                    embedding: Optional[ComplexEmbedding] = None) -> dict:
    """Record of one coset codeword

    Keys: ``index``, ``elements`` (integer coordinates over the order basis), ``matrices``
    (entry coordinates over the field basis), ``determinants`` (exact coordinates) and
    ``abs_det2`` (numeric ``|det|^2``, only with an embedding)
    """
    record = {"index": index,
              "elements": [[_exact(c) for c in order.coordinates(x)] for x in codeword.elements],
              "matrices": [[[_coordinates(entry) for entry in row] for row in matrix] for matrix in codeword.matrices],
              "determinants": [_coordinates(codebook.determinant(x)) for x in codeword.elements]}
    if embedding is not None:
        record["abs_det2"] = [round(abs(embedding(codebook.determinant(x))) ** 2, 12) for x in codeword.elements]
    return record


def format_record(record: Mapping) -> str:
    """Machine-readable line (sorted keys, no whitespace variation)"""
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def format_text(record: Mapping) -> str:
    """Human-readable block of one codeword record"""
    lines = ["codeword {}".format(record["index"])]
    for k, (element, determinant) in enumerate(zip(record["elements"], record["determinants"])):
        line = "  x_{}: {}  det: {}".format(k, element, determinant)
        if "abs_det2" in record:
            line += "  |det|^2: {:.6f}".format(record["abs_det2"][k])
        lines.append(line)
    return "\n".join(lines)


def write_records(stream: TextIO, records: Iterable[Mapping], format: str = "records") -> int:
    """Write records as JSON lines (``"records"``) or text blocks (``"text"``)

    :raises ValueError: If the format is unknown

    :return: Number of records written
    :rtype: int
    """
    if format not in FORMATS:
        raise ValueError("Unsupported format: {}. Available formats: {}".format(format, ", ".join(FORMATS)))
    count = 0
    for record in records:
        stream.write((format_record(record) if format == "records" else format_text(record)) + "\n")
        count += 1
    return count


class RecordFileIterator():
    def __init__(self, pathname: str) -> None:
        """Python iterator for loading exported codebooks

        The iterator will load the next record file in the list of path names.
        The output of the iterator is a tuple of the filename and the list of records
        (dictionaries) stored in the file

        Supported formats:

        - JSON lines (jsonl)

        :param pathname: String containing a path specification for the exported codebooks.
                         Python `glob <https://docs.python.org/3/library/glob.html#glob.glob>`_ method
                         is used to find all files matching the path specification
        :type pathname: str
        """
        self.n = 0
        self.file_paths = sorted(glob.glob(pathname))

    def __iter__(self) -> 'RecordFileIterator':
        """Return self to make iterable"""
        return self

    def __next__(self) -> Tuple[str, List[dict]]:
        """Return next file

        :return: Tuple of file name and records
        :rtype: tuple
        """
        if self.n >= len(self.file_paths):
            raise StopIteration

        if self.file_paths[self.n].endswith(".jsonl"):
            return self._format_jsonl()
        else:
            raise ValueError("Unsupported format: {}. Available formats: jsonl" \
                .format(os.path.splitext(self.file_paths[self.n])[1]))

    def _format_jsonl(self) -> Tuple[str, List[dict]]:
        """Load JSON lines from file

        :return: Tuple of file name and records
        :rtype: tuple
        """
        filename = os.path.basename(self.file_paths[self.n])
        with open(self.file_paths[self.n], "r") as f:
            records = [json.loads(line) for line in f if line.strip()]

        self.n += 1
        return filename, records
