//! Strongly regular graphs: counting verification, parameter algebra and the
//! explicit rank 3 families.

mod families;
mod graph;
mod params;

pub use families::{
    affine_polar, affine_polar_plus_complement, alternating_forms_graph, bilinear_forms_graph,
    cayley_graph, clique_union, complement, grid_graph, paley_graph, paley_tournament,
    vanlint_schrijver, VLS_EXCLUDED,
};
pub use graph::{DirectedGraph, Graph, DIGRAPH_FORMAT, GRAPH_FORMAT};
pub use params::{
    complement_params, intersection_numbers, mvgroup_from_params, srg_check, IntersectionNumbers,
    SrgParams,
};

pub mod formulas;

pub use formulas::PolarSign;
