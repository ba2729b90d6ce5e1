use std::io::Read;
use std::path::Path;

use artin_core::{parse_graph, PresentationGraph};

/// Reads a graph from a DSL or JSON file; `-` reads standard input.
///
/// Input whose first non-blank character is `{` is taken as JSON.
pub fn load_graph(path: &Path) -> Result<PresentationGraph, String> {
    let shown = path.display();
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("<stdin>: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{shown}: {e}"))?
    };
    if text.trim_start().starts_with('{') {
        PresentationGraph::from_json_str(&text).map_err(|e| format!("{shown}: {e}"))
    } else {
        parse_graph(&text).map_err(|e| format!("{shown}: {e}"))
    }
}
