use crate::parser::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum FrontendError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid experiment file: {0}")]
    Json(String),
    #[error("{field}: {message}")]
    Schema { field: String, message: String },
    #[error("{location}: {source}")]
    Parse { location: String, source: ParseError },
    /// A pipeline stage failed on a valid experiment.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        source: dml_core::Error,
    },
    #[error("writing output: {0}")]
    Output(String),
}

impl FrontendError {
    /// Problems with what the user supplied, as opposed to failures inside
    /// the analysis.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, FrontendError::Stage { .. })
    }
}

pub(crate) fn stage(name: &'static str) -> impl Fn(dml_core::Error) -> FrontendError {
    move |source| FrontendError::Stage { stage: name, source }
}
