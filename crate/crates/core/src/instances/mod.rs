//! Instance generation, the built-in lower-bound instances and the text file
//! formats for points, graphs and solutions.

mod generate;
mod io;
mod paper;

pub use generate::{generate, Distribution, GeneratorConfig};
pub use io::{
    read_graph, read_graph_file, read_points, read_points_file, read_solution, read_solution_file,
    write_graph, write_graph_file, write_points, write_points_file, write_solution,
    write_solution_file,
};
pub use paper::{paper_instance, PaperInstance};
