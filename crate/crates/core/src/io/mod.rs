//! Input/output layer: expression parsing, curve-description files, report
//! assembly, and the published-value regression rows.

mod curvefile;
mod parser;
mod report;
pub mod verify;

pub use curvefile::{load_curve_file, CurveFile, SingularityEntry};
pub use parser::parse_poly;
pub use report::{analyze, render_text, AlexanderBound, CurveReport, SingularityReport};
