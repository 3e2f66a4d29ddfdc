from .hyperedges import (
    HyperedgeListDocument,
    ParseWarning,
    load_hypergraph,
    parse_hyperedge_list,
    read_hyperedge_list,
    write_hyperedge_list,
)
from .svg import render_anc_svg
from .tables import ResultTable, comparison_table, sweep_table, write_stats_csv
from .trajectory import (
    CSV_HEADER,
    read_trajectory_json,
    rounded,
    write_trajectory_csv,
    write_trajectory_json,
)
