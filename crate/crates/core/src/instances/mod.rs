//! Instance families, exhaustive small graphs, file I/O.

pub mod detour;
pub mod enumerate;
pub mod families;
pub mod io;

pub use detour::{find_detour_instance, DetourInstance};
pub use enumerate::{connected_graphs_up_to, GraphCatalog};
pub use families::{generate, Family, FamilySpec, GenError};
pub use io::{
    format_instance, parse_instance, read_instance, read_sequence, write_instance, write_sequence, FileError,
};
