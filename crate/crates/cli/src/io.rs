use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use specjoin::graph::graph6::parse_graph6_lines;
use specjoin::Graph;

use crate::error::{CliError, CliResult};

/// First graph of a graph6 file, or of standard input for "-".
pub fn read_graph(path: &str) -> CliResult<Graph> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        s
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?
    };
    let graphs = parse_graph6_lines(&text).map_err(|source| CliError::Input { path: path.into(), source })?;
    graphs.into_iter().next().ok_or_else(|| CliError::Input {
        path: path.into(),
        source: specjoin::Error::Parse {
            offset: 0,
            reason: "no graph in input".into(),
        },
    })
}

/// Writes `text` to `out`, or to stdout when `out` is `None`.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
