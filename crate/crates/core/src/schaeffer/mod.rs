//! Labeled trees and quadrangulations: the predecessor construction, its
//! inverse, and its reformulation as a gluing of two trees.

mod construction;
mod fiber;
mod gluing;
mod predecessor;

pub use construction::{quad_of_encoding, quad_of_tree, tree_of_quad};
pub use fiber::{fiber, fiber_size_by_darts, point};
pub use gluing::{
    assemble, corner_assignment, doddering, gluer, DodderingTree, GluerTree, GluingAssignment,
};
pub use predecessor::{check_label_process, predecessor_table, PredecessorTable};
