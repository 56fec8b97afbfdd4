//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // --- EAF ingestion ---
    #[error("malformed XML at byte {offset}: {message}")]
    Xml { offset: u64, message: String },
    #[error("annotation {annotation_id} references undefined time slot {slot_id}")]
    MissingTimeSlot {
        annotation_id: String,
        slot_id: String,
    },
    #[error("annotation {annotation_id} references time slot {slot_id}, which carries no time value")]
    UnvaluedTimeSlot {
        annotation_id: String,
        slot_id: String,
    },
    #[error("tier {tier_id} has no PARTICIPANT attribute")]
    TierWithoutParticipant { tier_id: String },
    #[error("annotation {annotation_id} begins at {begin_ms} ms but ends at {end_ms} ms")]
    InvertedSpan {
        annotation_id: String,
        begin_ms: u64,
        end_ms: u64,
    },
    #[error("speaker {speaker_id}: units {first} and {second} overlap in time")]
    SpeakerOverlap {
        speaker_id: String,
        first: String,
        second: String,
    },

    // --- sidecar stores ---
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("{kind} entry {id:?} is not a JSON object")]
    NonObjectEntry { kind: &'static str, id: String },
    #[error("{kind} id must be non-empty")]
    EmptyId { kind: &'static str },
    #[error("{kind} {id:?}: field {field:?} {problem}")]
    BadField {
        kind: &'static str,
        id: String,
        field: &'static str,
        problem: String,
    },

    // --- tables, lexicons, annotation files ---
    #[error("normalization table line {line}: {message}")]
    Table { line: usize, message: String },
    #[error("filler lexicon is empty")]
    EmptyLexicon,
    #[error("language annotation line {line}: {message}")]
    LangRow { line: usize, message: String },
    #[error("language annotation line {line}: {code:?} is not an ISO 639 code")]
    UnknownLanguageCode { line: usize, code: String },

    // --- segmentation directives ---
    #[error("directive line {line}: {message}")]
    DirectiveRow { line: usize, message: String },
    #[error("directive line {line}: unknown transcription unit {tu_id:?}")]
    UnknownTu { line: usize, tu_id: String },
    #[error("directive line {line}: transcription unit {tu_id:?} listed more than once")]
    DuplicateTu { line: usize, tu_id: String },
    #[error("unit {unit_id:?} groups transcription units of different speakers ({first} and {second})")]
    CrossSpeakerUnit {
        unit_id: String,
        first: String,
        second: String,
    },

    // --- emission ---
    #[error("sound URL template: {message}")]
    Template { message: String },
    #[error("utterance {sent_id} has no tokens")]
    EmptyUtterance { sent_id: String },
    #[error("token in {sent_id} cannot attach to its own sentence")]
    AttachToSelf { sent_id: String },
    #[error("AttachTo requires a non-empty relation")]
    EmptyRelation,

    // --- CoNLL-U reading ---
    #[error("{file}:{line}: {message}")]
    Conllu {
        file: String,
        line: usize,
        message: String,
    },

    // --- sampling ---
    #[error("sample target {target} tokens exceeds corpus size {available}")]
    TargetExceedsCorpus { target: u64, available: u64 },
    #[error("sample target must be positive")]
    ZeroTarget,
    #[error("cannot split {selected} conversations over three sets")]
    NotEnoughConversations { selected: usize },
    #[error("invalid split ratios: {message}")]
    BadRatios { message: String },

    // --- configuration / IO ---
    #[error("configuration: {message}")]
    Config { message: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
