"""Gray sequence of binary partitions: loopless stepping, ranking and counting."""
from .counting import CountTable, bpc, size_of_index
from .errors import BinGrayError, DomainError, PartitionSyntaxError, StartOfSequence
from .gray_oracle import PaddedPartition, gray_B_n, gray_prefix
from .partition import EMPTY, BinaryPartition, double, floor_halve, format_partition, parse, size
from .ranking import partition_from_trail, rank, trail, unrank
from .stepper import GrayCursor, Move, cursor_from, predecessor, successor

__version__ = "0.1.0"
