//! Lexer for Jefferson-notated transcription units.
//!
//! A raw unit string is scanned into orthographic tokens carrying prosodic
//! and disfluency flags. The marker grammar:
//!
//! * `(.)`, `(N)`, `(N.N)` — standalone pause groups; set `pause_after` on
//!   the preceding token and vanish from the token stream.
//! * `.` `?` `,` — intonation terminators on the preceding token
//!   (Descending, Question, Ascending respectively).
//! * `[` … `]` — overlap span; tokens inside get `in_overlap`. An unmatched
//!   `[` extends to the unit end, an unmatched `]` implies a span from the
//!   unit start; both are tolerated with a diagnostic.
//! * word-final `-` — cut-off; the emitted surface ends with `~` instead,
//!   so Italian hyphenated words stay unambiguous.
//! * `:` inside a word — prolonged sound, colons stripped from the surface.
//! * `°…°` quiet, `>…<` fast, `<…>` slow, `=` latched, fully-uppercase
//!   word loud. Recorded on the token but never emitted as CoNLL-U
//!   features; they survive in `# text_jefferson`.
//! * `(word)` — uncertain transcription, parentheses stripped.
//! * `((…))` — transcriber comment, dropped from the token stream.
//!
//! Lexing never fails; ill-formed markup degrades to diagnostics.

use std::fmt;

use crate::eaf::Conversation;

/// Intonation pattern signalled by a terminator character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Intonation {
    Descending,
    Question,
    Ascending,
}

impl Intonation {
    /// Maps a terminator character to its intonation value.
    pub fn from_terminator(c: char) -> Option<Self> {
        match c {
            '.' => Some(Intonation::Descending),
            '?' => Some(Intonation::Question),
            ',' => Some(Intonation::Ascending),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Intonation::Descending => "Descending",
            Intonation::Question => "Question",
            Intonation::Ascending => "Ascending",
        }
    }
}

impl fmt::Display for Intonation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One orthographic token plus the flags extracted from Jefferson markup.
///
/// `surface` is the markup-stripped form; for cut-off tokens it ends with
/// `~`. `pause_after` and `intonation` describe events immediately following
/// the token.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JeffersonToken {
    pub surface: String,
    pub cutoff: bool,
    pub uncertain: bool,
    pub in_overlap: bool,
    pub prolonged: bool,
    pub quiet: bool,
    pub loud: bool,
    pub fast: bool,
    pub slow: bool,
    pub latched: bool,
    pub pause_after: bool,
    pub intonation: Option<Intonation>,
}

impl JeffersonToken {
    pub fn new(surface: impl Into<String>) -> Self {
        JeffersonToken {
            surface: surface.into(),
            ..JeffersonToken::default()
        }
    }
}

/// Non-fatal problem found while lexing; positions are byte offsets into the
/// raw unit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexIssue {
    /// A span marker was still open at the unit end.
    UnmatchedOpen { marker: char, pos: usize },
    /// `]` without a preceding `[`; the span is taken from the unit start.
    UnmatchedClose { marker: char, pos: usize },
    /// A control character with no meaning at its position; stripped.
    StrayMarker { marker: char, pos: usize },
    /// A pause group before any token; dropped.
    LeadingPause { pos: usize },
    /// An intonation terminator before any token; dropped.
    LeadingTerminator { marker: char, pos: usize },
    /// `=` with no token to attach to.
    DanglingLatch { pos: usize },
}

impl fmt::Display for LexIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexIssue::UnmatchedOpen { marker, pos } => {
                write!(f, "unmatched {marker:?} at byte {pos}; span extended to unit edge")
            }
            LexIssue::UnmatchedClose { marker, pos } => {
                write!(f, "unmatched {marker:?} at byte {pos}; span taken from unit start")
            }
            LexIssue::StrayMarker { marker, pos } => {
                write!(f, "stray {marker:?} at byte {pos} stripped")
            }
            LexIssue::LeadingPause { pos } => {
                write!(f, "pause at byte {pos} precedes any token; dropped")
            }
            LexIssue::LeadingTerminator { marker, pos } => {
                write!(f, "terminator {marker:?} at byte {pos} precedes any token; dropped")
            }
            LexIssue::DanglingLatch { pos } => {
                write!(f, "latch '=' at byte {pos} has no token to attach to")
            }
        }
    }
}

/// Span markers active while a word is being scanned.
#[derive(Debug, Clone, Copy, Default)]
struct SpanState {
    in_overlap: bool,
    quiet: bool,
    fast: bool,
    slow: bool,
    uncertain: bool,
}

struct Scanner {
    tokens: Vec<JeffersonToken>,
    issues: Vec<LexIssue>,
    spans: SpanState,
    open_positions: [Option<usize>; 5],
    cur: Option<JeffersonToken>,
    pending_latch: Option<usize>,
}

const OVERLAP: usize = 0;
const QUIET: usize = 1;
const FAST: usize = 2;
const SLOW: usize = 3;
const UNCERTAIN: usize = 4;

impl Scanner {
    fn new() -> Self {
        Scanner {
            tokens: Vec::new(),
            issues: Vec::new(),
            spans: SpanState::default(),
            open_positions: [None; 5],
            cur: None,
            pending_latch: None,
        }
    }

    fn push_char(&mut self, c: char) {
        if self.cur.is_none() {
            self.cur = Some(JeffersonToken {
                in_overlap: self.spans.in_overlap,
                quiet: self.spans.quiet,
                fast: self.spans.fast,
                slow: self.spans.slow,
                uncertain: self.spans.uncertain,
                latched: self.pending_latch.take().is_some(),
                ..JeffersonToken::default()
            });
        }
        self.cur.as_mut().unwrap().surface.push(c);
    }

    fn finalize_word(&mut self) {
        let Some(mut tok) = self.cur.take() else { return };
        if tok.surface.is_empty() {
            return;
        }
        if tok.surface.ends_with('-') {
            tok.surface.pop();
            if tok.surface.is_empty() {
                // A bare hyphen carries no orthographic material.
                self.issues.push(LexIssue::StrayMarker { marker: '-', pos: 0 });
                return;
            }
            tok.cutoff = true;
            tok.surface.push('~');
        }
        let mut has_alpha = false;
        let mut all_upper = true;
        for c in tok.surface.chars() {
            if c.is_alphabetic() {
                has_alpha = true;
                if !c.is_uppercase() {
                    all_upper = false;
                }
            }
        }
        tok.loud = has_alpha && all_upper;
        self.tokens.push(tok);
    }

    /// The token an event (pause, terminator) applies to: the word being
    /// scanned if any, else the last emitted token.
    fn event_target(&mut self) -> Option<&mut JeffersonToken> {
        if self.cur.as_ref().is_some_and(|t| !t.surface.is_empty()) {
            self.cur.as_mut()
        } else {
            self.tokens.last_mut()
        }
    }

    fn toggle_span(&mut self, idx: usize, on: bool, pos: usize) {
        let flag = match idx {
            OVERLAP => &mut self.spans.in_overlap,
            QUIET => &mut self.spans.quiet,
            FAST => &mut self.spans.fast,
            SLOW => &mut self.spans.slow,
            _ => &mut self.spans.uncertain,
        };
        *flag = on;
        self.open_positions[idx] = on.then_some(pos);
        if on {
            // A span opening mid-word covers the word in progress.
            if let Some(cur) = self.cur.as_mut() {
                if !cur.surface.is_empty() {
                    match idx {
                        OVERLAP => cur.in_overlap = true,
                        QUIET => cur.quiet = true,
                        FAST => cur.fast = true,
                        SLOW => cur.slow = true,
                        _ => cur.uncertain = true,
                    }
                }
            }
        }
    }
}

/// True for `.`/`N`/`N.N` — the content of a pause group.
fn is_pause_group(content: &str) -> bool {
    if content == "." {
        return true;
    }
    if content.is_empty() {
        return false;
    }
    let mut parts = content.splitn(2, '.');
    let whole = parts.next().unwrap_or("");
    let frac = parts.next();
    if whole.is_empty() || !whole.bytes().all(|b| b.is_ascii_digit()) {
        return false;
    }
    match frac {
        None => true,
        Some(fr) => !fr.is_empty() && fr.bytes().all(|b| b.is_ascii_digit()),
    }
}

/// Lexes a raw Jefferson unit into tokens and diagnostics. Total and
/// deterministic; never fails.
pub fn tokenize_jefferson(raw: &str) -> (Vec<JeffersonToken>, Vec<LexIssue>) {
    let mut sc = Scanner::new();
    let mut iter = raw.char_indices().peekable();

    while let Some((pos, c)) = iter.next() {
        match c {
            c if c.is_whitespace() => sc.finalize_word(),
            '.' | '?' | ',' => {
                let intonation = Intonation::from_terminator(c).unwrap();
                match sc.event_target() {
                    Some(tok) => {
                        if tok.intonation.is_none() {
                            tok.intonation = Some(intonation);
                        }
                    }
                    None => sc.issues.push(LexIssue::LeadingTerminator { marker: c, pos }),
                }
            }
            '(' => {
                if iter.peek().is_some_and(|&(_, n)| n == '(') {
                    // Transcriber comment: skip to the closing `))`.
                    iter.next();
                    let rest = &raw[pos + 2..];
                    match rest.find("))") {
                        Some(end) => {
                            let stop = pos + 2 + end + 2;
                            while iter.peek().is_some_and(|&(p, _)| p < stop) {
                                iter.next();
                            }
                        }
                        None => {
                            sc.issues.push(LexIssue::UnmatchedOpen { marker: '(', pos });
                            break;
                        }
                    }
                    continue;
                }
                let rest = &raw[pos + 1..];
                match rest.find(')') {
                    Some(end) if is_pause_group(&rest[..end]) => {
                        let stop = pos + 1 + end + 1;
                        while iter.peek().is_some_and(|&(p, _)| p < stop) {
                            iter.next();
                        }
                        match sc.event_target() {
                            Some(tok) => tok.pause_after = true,
                            None => sc.issues.push(LexIssue::LeadingPause { pos }),
                        }
                    }
                    _ => {
                        if sc.spans.uncertain {
                            sc.issues.push(LexIssue::StrayMarker { marker: '(', pos });
                        } else {
                            sc.toggle_span(UNCERTAIN, true, pos);
                        }
                    }
                }
            }
            ')' => {
                if sc.spans.uncertain {
                    sc.toggle_span(UNCERTAIN, false, pos);
                } else {
                    sc.issues.push(LexIssue::StrayMarker { marker: ')', pos });
                }
            }
            '[' => {
                if sc.spans.in_overlap {
                    sc.issues.push(LexIssue::StrayMarker { marker: '[', pos });
                } else {
                    sc.toggle_span(OVERLAP, true, pos);
                }
            }
            ']' => {
                if sc.spans.in_overlap {
                    sc.toggle_span(OVERLAP, false, pos);
                } else {
                    // Span from the unit start: mark everything seen so far.
                    for tok in &mut sc.tokens {
                        tok.in_overlap = true;
                    }
                    if let Some(cur) = sc.cur.as_mut() {
                        cur.in_overlap = true;
                    }
                    sc.issues.push(LexIssue::UnmatchedClose { marker: ']', pos });
                }
            }
            '°' => {
                let on = !sc.spans.quiet;
                sc.toggle_span(QUIET, on, pos);
            }
            '>' => {
                if sc.spans.slow {
                    sc.toggle_span(SLOW, false, pos);
                } else {
                    sc.toggle_span(FAST, true, pos);
                }
            }
            '<' => {
                if sc.spans.fast {
                    sc.toggle_span(FAST, false, pos);
                } else {
                    sc.toggle_span(SLOW, true, pos);
                }
            }
            ':' => match sc.cur.as_mut().filter(|t| !t.surface.is_empty()) {
                Some(cur) => cur.prolonged = true,
                None => sc.issues.push(LexIssue::StrayMarker { marker: ':', pos }),
            },
            '=' => {
                if sc.cur.as_ref().is_some_and(|t| !t.surface.is_empty()) {
                    sc.cur.as_mut().unwrap().latched = true;
                } else {
                    sc.pending_latch = Some(pos);
                }
            }
            _ => sc.push_char(c),
        }
    }
    sc.finalize_word();

    if let Some(pos) = sc.pending_latch.take() {
        match sc.tokens.last_mut() {
            Some(tok) => tok.latched = true,
            None => sc.issues.push(LexIssue::DanglingLatch { pos }),
        }
    }
    let markers = ['[', '°', '>', '<', '('];
    for (idx, marker) in markers.iter().enumerate() {
        if let Some(pos) = sc.open_positions[idx] {
            let open = match idx {
                OVERLAP => sc.spans.in_overlap,
                QUIET => sc.spans.quiet,
                FAST => sc.spans.fast,
                SLOW => sc.spans.slow,
                _ => sc.spans.uncertain,
            };
            if open {
                sc.issues.push(LexIssue::UnmatchedOpen { marker: *marker, pos });
            }
        }
    }
    debug_assert!(sc.tokens.iter().all(|t| !t.surface.is_empty()));
    let _ = bytes;
    (sc.tokens, sc.issues)
}

/// Canonical `# text_jefferson` rendering: whitespace runs collapsed to
/// single spaces, leading/trailing whitespace trimmed, all marks kept.
pub fn render_text_jefferson(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for word in raw.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

/// Space-joined surfaces; feeds the plain `# text` line.
pub fn plain_text<'a, I>(tokens: I) -> String
where
    I: IntoIterator<Item = &'a JeffersonToken>,
{
    let mut out = String::new();
    for tok in tokens {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&tok.surface);
    }
    out
}

/// A transcription unit after lexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedTu {
    pub tu_id: String,
    pub speaker_id: String,
    pub begin_ms: u64,
    pub end_ms: u64,
    pub raw_jefferson: String,
    pub tokens: Vec<JeffersonToken>,
}

/// A conversation with every unit lexed; `lex_issues` pairs unit ids with
/// the diagnostics their raw text produced.
#[derive(Debug, Clone)]
pub struct TokenizedConversation {
    pub conversation_id: String,
    pub module_id: String,
    pub tus: Vec<TokenizedTu>,
    pub lex_issues: Vec<(String, LexIssue)>,
}

pub fn tokenize_conversation(conv: &Conversation) -> TokenizedConversation {
    let mut tus = Vec::with_capacity(conv.tus.len());
    let mut lex_issues = Vec::new();
    for tu in &conv.tus {
        let (tokens, issues) = tokenize_jefferson(&tu.raw_jefferson);
        lex_issues.extend(issues.into_iter().map(|i| (tu.tu_id.clone(), i)));
        tus.push(TokenizedTu {
            tu_id: tu.tu_id.clone(),
            speaker_id: tu.speaker_id.clone(),
            begin_ms: tu.begin_ms,
            end_ms: tu.end_ms,
            raw_jefferson: tu.raw_jefferson.clone(),
            tokens,
        });
    }
    TokenizedConversation {
        conversation_id: conv.conversation_id.clone(),
        module_id: conv.module_id.clone(),
        tus,
        lex_issues,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(tokens: &[JeffersonToken]) -> Vec<&str> {
        tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    #[test]
    fn pause_and_descending() {
        let (tokens, issues) = tokenize_jefferson("si (.) va bene.");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["si", "va", "bene"]);
        assert!(tokens[0].pause_after);
        assert!(!tokens[1].pause_after);
        assert_eq!(tokens[2].intonation, Some(Intonation::Descending));
    }

    #[test]
    fn cutoff_and_overlap_question() {
        let (tokens, issues) = tokenize_jefferson("pero- [davvero?]");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["pero~", "davvero"]);
        assert!(tokens[0].cutoff);
        assert!(!tokens[0].in_overlap);
        assert!(tokens[1].in_overlap);
        assert_eq!(tokens[1].intonation, Some(Intonation::Question));
    }

    #[test]
    fn empty_input() {
        let (tokens, issues) = tokenize_jefferson("");
        assert!(tokens.is_empty());
        assert!(issues.is_empty());
    }

    #[test]
    fn prolonged_comment_quiet_ascending() {
        let (tokens, issues) = tokenize_jefferson("no:: ((ride)) °si°,");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["no", "si"]);
        assert!(tokens[0].prolonged);
        assert!(tokens[1].quiet);
        assert_eq!(tokens[1].intonation, Some(Intonation::Ascending));
    }

    #[test]
    fn timed_pauses_behave_like_short_ones() {
        for pause in ["(.)", "(2)", "(0.5)", "(12.25)"] {
            let raw = format!("prima {pause} dopo");
            let (tokens, issues) = tokenize_jefferson(&raw);
            assert!(issues.is_empty(), "{raw}: {issues:?}");
            assert_eq!(surfaces(&tokens), ["prima", "dopo"], "{raw}");
            assert!(tokens[0].pause_after, "{raw}");
        }
    }

    #[test]
    fn pause_at_unit_start_is_diagnostic_only() {
        let (tokens, issues) = tokenize_jefferson("(.) ciao");
        assert_eq!(surfaces(&tokens), ["ciao"]);
        assert!(!tokens[0].pause_after);
        assert!(matches!(issues.as_slice(), [LexIssue::LeadingPause { .. }]));
    }

    #[test]
    fn terminator_at_unit_start_is_diagnostic_only() {
        let (tokens, issues) = tokenize_jefferson("? ciao");
        assert_eq!(surfaces(&tokens), ["ciao"]);
        assert_eq!(tokens[0].intonation, None);
        assert!(matches!(
            issues.as_slice(),
            [LexIssue::LeadingTerminator { marker: '?', .. }]
        ));
    }

    #[test]
    fn uncertain_word_parentheses_stripped() {
        let (tokens, issues) = tokenize_jefferson("ho detto (forse) domani");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["ho", "detto", "forse", "domani"]);
        assert!(tokens[2].uncertain);
        assert!(!tokens[3].uncertain);
    }

    #[test]
    fn uncertain_span_covers_multiple_words() {
        let (tokens, issues) = tokenize_jefferson("(va bene) ok");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["va", "bene", "ok"]);
        assert!(tokens[0].uncertain && tokens[1].uncertain);
        assert!(!tokens[2].uncertain);
    }

    #[test]
    fn pace_spans() {
        let (tokens, issues) = tokenize_jefferson(">si si< <no no>");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["si", "si", "no", "no"]);
        assert!(tokens[0].fast && tokens[1].fast && !tokens[2].fast);
        assert!(tokens[2].slow && tokens[3].slow && !tokens[1].slow);
    }

    #[test]
    fn latching_attaches_to_adjacent_token() {
        let (tokens, _) = tokenize_jefferson("prima=");
        assert!(tokens[0].latched);
        let (tokens, _) = tokenize_jefferson("=dopo subito");
        assert!(tokens[0].latched && !tokens[1].latched);
        let (tokens, _) = tokenize_jefferson("parola =");
        assert!(tokens[0].latched);
        let (tokens, issues) = tokenize_jefferson("=");
        assert!(tokens.is_empty());
        assert!(matches!(issues.as_slice(), [LexIssue::DanglingLatch { .. }]));
    }

    #[test]
    fn loud_is_fully_uppercase() {
        let (tokens, _) = tokenize_jefferson("BASTA Basta basta");
        assert!(tokens[0].loud);
        assert!(!tokens[1].loud);
        assert!(!tokens[2].loud);
        assert_eq!(tokens[0].surface, "BASTA");
    }

    #[test]
    fn unmatched_open_bracket_extends_to_unit_end() {
        let (tokens, issues) = tokenize_jefferson("prima [poi dopo");
        assert!(!tokens[0].in_overlap);
        assert!(tokens[1].in_overlap && tokens[2].in_overlap);
        assert!(matches!(
            issues.as_slice(),
            [LexIssue::UnmatchedOpen { marker: '[', .. }]
        ));
    }

    #[test]
    fn unmatched_close_bracket_spans_from_unit_start() {
        let (tokens, issues) = tokenize_jefferson("prima poi] dopo");
        assert!(tokens[0].in_overlap && tokens[1].in_overlap);
        assert!(!tokens[2].in_overlap);
        assert!(matches!(
            issues.as_slice(),
            [LexIssue::UnmatchedClose { marker: ']', .. }]
        ));
    }

    #[test]
    fn mid_word_hyphen_is_kept() {
        let (tokens, issues) = tokenize_jefferson("socio-politico anti-");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["socio-politico", "anti~"]);
        assert!(!tokens[0].cutoff);
        assert!(tokens[1].cutoff);
    }

    #[test]
    fn comment_only_unit_yields_no_tokens() {
        let (tokens, issues) = tokenize_jefferson("((ride))");
        assert!(tokens.is_empty());
        assert!(issues.is_empty());
    }

    #[test]
    fn comment_with_spaces_is_skipped() {
        let (tokens, issues) = tokenize_jefferson("ciao ((tossisce due volte)) a tutti");
        assert!(issues.is_empty());
        assert_eq!(surfaces(&tokens), ["ciao", "a", "tutti"]);
    }

    #[test]
    fn stray_markers_are_reported_and_stripped() {
        let (tokens, issues) = tokenize_jefferson(") casa :");
        assert_eq!(surfaces(&tokens), ["casa"]);
        assert_eq!(issues.len(), 2);
        assert!(matches!(issues[0], LexIssue::StrayMarker { marker: ')', .. }));
        assert!(matches!(issues[1], LexIssue::StrayMarker { marker: ':', .. }));
    }

    #[test]
    fn first_terminator_wins() {
        let (tokens, _) = tokenize_jefferson("bene.?");
        assert_eq!(tokens[0].intonation, Some(Intonation::Descending));
    }

    #[test]
    fn terminator_after_closing_span_still_lands_on_token() {
        let (tokens, issues) = tokenize_jefferson("°casa°.");
        assert!(issues.is_empty());
        assert_eq!(tokens[0].surface, "casa");
        assert!(tokens[0].quiet);
        assert_eq!(tokens[0].intonation, Some(Intonation::Descending));
    }

    #[test]
    fn standalone_pause_after_word_applies_to_it() {
        let (tokens, _) = tokenize_jefferson("va(.) bene");
        assert!(tokens[0].pause_after);
        assert_eq!(surfaces(&tokens), ["va", "bene"]);
    }

    #[test]
    fn render_collapses_whitespace_only() {
        assert_eq!(render_text_jefferson("si  (.)  va bene."), "si (.) va bene.");
        assert_eq!(render_text_jefferson("no:: ((ride)) °si°,"), "no:: ((ride)) °si°,");
        assert_eq!(render_text_jefferson("  "), "");
        assert_eq!(render_text_jefferson("a\tb\nc"), "a b c");
    }

    #[test]
    fn plain_text_joins_surfaces() {
        let toks = vec![
            JeffersonToken::new("si"),
            JeffersonToken::new("va"),
            JeffersonToken::new("bene"),
        ];
        assert_eq!(plain_text(&toks), "si va bene");
        let toks = vec![JeffersonToken::new("pero~"), JeffersonToken::new("davvero")];
        assert_eq!(plain_text(&toks), "pero~ davvero");
        assert_eq!(plain_text([].iter()), "");
    }

    #[test]
    fn surfaces_never_contain_control_characters() {
        let inputs = [
            "[a] °b° >c< <d> e= (f) ((g)) h: i- j.",
            "°[x>y<z]°",
            "(((weird",
            "a[b]c",
        ];
        for raw in inputs {
            let (tokens, _) = tokenize_jefferson(raw);
            for tok in tokens {
                assert!(!tok.surface.is_empty());
                for bad in ['[', ']', '°', '>', '<', '=', ':', '(', ')'] {
                    assert!(
                        !tok.surface.contains(bad),
                        "{raw:?} produced surface {:?} containing {bad:?}",
                        tok.surface
                    );
                }
            }
        }
    }
}
