use thiserror::Error;

use crate::word::Word;

#[derive(Error, Debug)]
pub enum GogError {
    #[error("invalid character at position {position} in word {text:?}")]
    WordSyntax { text: String, position: usize },

    #[error("word {word} uses generator index {gen} but the ambient rank is {rank}")]
    Alphabet { word: Word, gen: u32, rank: u32 },

    #[error("graphs have different ambient ranks ({0} vs {1})")]
    RankMismatch(u32, u32),

    #[error("graph has no basepoint")]
    NoBasepoint,

    #[error("graph is not folded")]
    NotFolded,

    #[error("no lift exists: generator word {word} of the subgraph is not accepted")]
    NoLift { word: Word },

    #[error("edge group {edge} is not contained in subgroup {vertex}: word {word} rejected")]
    EdgeGroupNotContained {
        edge: usize,
        vertex: usize,
        word: Word,
    },

    #[error("attachment of edge space {edge} (end {end}) is not an embedding; input is not immersed")]
    AttachmentNotEmbedding { edge: usize, end: usize },

    #[error("malformed graph of graphs: {0}")]
    Malformed(String),

    #[error("mid-graph has a tree component: vertex space {vertex}, edge {edge} (use --strip-tree-mids to discard it)")]
    TreeMidComponent { vertex: usize, edge: usize },

    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    #[error("blowdown precondition violated: attachment images of edge {0} intersect")]
    BlowdownImagesIntersect(usize),

    #[error("blowdown of edge {edge} would break the embedding of edge space {other}")]
    BlowdownBreaksEmbedding { edge: usize, other: usize },

    #[error("no blowup partition certificate at vertex {0} (valence <= 3 or hypotheses violated)")]
    NoPartition(usize),

    #[error("reduction did not terminate within {0} moves")]
    ReductionDiverged(usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("oracle length cap {0} exceeds the guard limit {1}")]
    OracleCap(usize, usize),

    #[error("parse error at line {line}: {message}")]
    InstanceParse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
