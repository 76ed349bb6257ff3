from app.partitions.errors import (
    InvariantError,
    PartitionError,
    PartitionParseError,
    PreconditionError,
)
from app.partitions.hooks import (
    HookClass,
    HookProfile,
    HookRecord,
    S_operator,
    bad_hooks,
    e_weight,
    hook_profile,
    is_L_partition,
    s_value,
    t_value,
    z_conj_value,
    z_value,
)
from app.partitions.mullineux import (
    RimData,
    e_rim,
    mullineux,
    mullineux_characterization_check,
    mullineux_layers,
    strip_I,
    strip_J,
    strip_truncated_rim,
)
from app.partitions.partition import (
    EMPTY,
    Node,
    Partition,
    add_column,
    conjugate,
    enumerate_partitions,
    format_partition,
    is_e_regular,
    is_e_restricted,
    num_parts,
    parse_partition,
    part_at,
    partition_count,
    partitions_up_to,
    remove_first_column,
    remove_first_row,
    rim,
    size,
)
from app.partitions.regularisation import (
    LadderCounts,
    ladder_capacity,
    ladder_counts,
    ladder_index,
    ladder_nodes,
    ladder_top_row,
    regularise,
)
from app.partitions.render import Annotation, RenderOptions, render_diagram
