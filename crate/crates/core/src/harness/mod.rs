//! Corpus registry, run configuration, and the experiment drivers used by
//! the command-line front end.

mod config;
mod corpus;
mod experiments;
mod table;
mod verify;

pub use config::{OutputFormat, RunConfig, SEED_ENV_VAR};
pub use corpus::{parse_corpus_name, standard_corpus, sweep_instances, CorpusEntry, GeneratorSpec};
pub use experiments::{run_experiment, cubes_ideal, Experiment};
pub use table::{Cell, Table};
pub use verify::{load_wlp_input, run_check_wlp, run_verify, CheckKind, WlpInput};
