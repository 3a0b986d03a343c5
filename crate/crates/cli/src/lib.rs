//! Library side of the `hcseries` command: output records, their text and
//! structured renderings, verb dispatch and golden-file regeneration.

pub mod commands;
pub mod goldens;
pub mod records;

pub use commands::{records_for, Cli, Command, Format};
pub use records::{parse_structured, render_structured, render_text, Record};

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Text => render_text(records),
        Format::Structured => render_structured(records),
    }
}
