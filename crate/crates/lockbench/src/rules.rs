//! The twenty lock automata.
//!
//! Each rule is a deterministic transition system over part-phase edge
//! events. Knob/handle/door phase changes update per-rule task memory (a
//! digit buffer, named counters, a visited set) exactly once per edge, and
//! the rule's unlock predicate plus latched door-open flag produce a
//! [`LockVector`] after every step.
//!
//! Rules are hand-written transition functions behind one shared
//! interface; the more intricate ones (12, 15, 17, 18) do not fit a small
//! declarative language, and a uniform interface keeps them uniformly
//! testable. A breadth-first solver and a brute-force verifier operate on
//! the shared interface only.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::safe::{JointName, PartPhaseVector};

#[derive(Debug, Error, PartialEq)]
pub enum RuleError {
    #[error("unknown rule id {0}; registered ids are 1..=20")]
    UnknownRule(u32),
    #[error("rule {rule} saw simultaneous knob and handle edges in strict mode")]
    RuleStateMismatch { rule: RuleId },
    #[error("no unlocking sequence for {rule} within depth {max_depth}")]
    NotSolvable { rule: RuleId, max_depth: usize },
}

/// Identifier of a registered lock rule, 1..=20.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleId(u32);

impl RuleId {
    pub const COUNT: u32 = 20;

    pub fn new(id: u32) -> Result<Self, RuleError> {
        if (1..=Self::COUNT).contains(&id) {
            Ok(RuleId(id))
        } else {
            Err(RuleError::UnknownRule(id))
        }
    }

    pub fn all() -> impl Iterator<Item = RuleId> {
        (1..=Self::COUNT).map(RuleId)
    }

    pub fn number(self) -> u32 {
        self.0
    }

    /// Parses both `rule_007` and plain `7`.
    pub fn parse(text: &str) -> Result<Self, RuleError> {
        let digits = text.strip_prefix("rule_").unwrap_or(text);
        let id: u32 = digits
            .parse()
            .map_err(|_| RuleError::UnknownRule(u32::MAX))?;
        RuleId::new(id)
    }
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "rule_{:03}", self.0)
    }
}

impl Serialize for RuleId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RuleId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        RuleId::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Abstract action alphabet for the solver. The fixed order
/// `ToggleKnob < ToggleHandle < OpenDoor` breaks ties in search.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum AbstractOp {
    ToggleKnob,
    ToggleHandle,
    OpenDoor,
}

impl AbstractOp {
    pub const ALL: [AbstractOp; 3] = [
        AbstractOp::ToggleKnob,
        AbstractOp::ToggleHandle,
        AbstractOp::OpenDoor,
    ];

    pub fn toggled_joint(self) -> Option<JointName> {
        match self {
            AbstractOp::ToggleKnob => Some(JointName::Knob),
            AbstractOp::ToggleHandle => Some(JointName::Handle),
            AbstractOp::OpenDoor => None,
        }
    }
}

impl std::fmt::Display for AbstractOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            AbstractOp::ToggleKnob => "toggle_knob",
            AbstractOp::ToggleHandle => "toggle_handle",
            AbstractOp::OpenDoor => "open_door",
        };
        write!(f, "{name}")
    }
}

/// Per-joint lock outputs of a rule after a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LockVector {
    pub knob_locked: bool,
    pub handle_locked: bool,
    pub door_locked: bool,
}

impl LockVector {
    pub fn locked(&self, joint: JointName) -> bool {
        match joint {
            JointName::Knob => self.knob_locked,
            JointName::Handle => self.handle_locked,
            JointName::Door => self.door_locked,
        }
    }

    pub fn as_array(&self) -> [bool; 3] {
        [self.knob_locked, self.handle_locked, self.door_locked]
    }
}

/// Task-phase memory of one rule: the hidden state that makes the tasks
/// non-Markovian.
///
/// `unlocked` is a latch: it never goes back to false once set, which
/// happens the moment an open door phase is observed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuleState {
    pub last_phase: PartPhaseVector,
    /// Digit buffer, bounded at the rule's buffer length.
    pub buffer: String,
    /// Named non-negative counters.
    pub counters: BTreeMap<String, u32>,
    /// Observed (knob_open, handle_open) combinations (rule 12 only).
    pub visited: BTreeSet<(bool, bool)>,
    pub unlocked: bool,
}

impl RuleState {
    pub fn counter(&self, name: &str) -> u32 {
        self.counters.get(name).copied().unwrap_or(0)
    }

    fn bump(&mut self, name: &str) {
        *self.counters.entry(name.to_string()).or_insert(0) += 1;
    }

    fn set_counter(&mut self, name: &str, value: u32) {
        self.counters.insert(name.to_string(), value);
    }

    fn push_digit(&mut self, digit: char, cap: usize) {
        self.buffer.push(digit);
        if self.buffer.len() > cap {
            let start = self.buffer.len() - cap;
            self.buffer = self.buffer[start..].to_string();
        }
    }
}

/// Direction of a part-phase edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Edge {
    Opened,
    Closed,
}

fn edge_between(before: bool, after: bool) -> Option<Edge> {
    match (before, after) {
        (false, true) => Some(Edge::Opened),
        (true, false) => Some(Edge::Closed),
        _ => None,
    }
}

/// Buffer capacity per rule (0 for rules without a digit buffer).
pub fn buffer_len(rule: RuleId) -> usize {
    match rule.number() {
        5 | 6 => 3,
        9 | 10 | 11 | 16 => 4,
        18 => 3,
        19 | 20 => 2,
        _ => 0,
    }
}

/// Counter names a rule maintains, for the catalog export.
pub fn counters_used(rule: RuleId) -> &'static [&'static str] {
    match rule.number() {
        7 | 17 => &["knob_toggles", "handle_toggles"],
        8 => &["handle_toggles"],
        13 => &["knob_toggles"],
        15 => &["knob_opens", "handle_closes"],
        18 => &["digit"],
        _ => &[],
    }
}

/// Fresh task state for a rule observed at `initial_phase`.
///
/// The buffer is empty, counters are zero (rule 18's digit counter starts
/// at 1), the visited set holds the initial knob/handle pair for rule 12,
/// and `unlocked` is the rule's predicate evaluated on the initial phase
/// (latching immediately if the door is already open).
pub fn init_rule(rule: RuleId, initial_phase: PartPhaseVector) -> RuleState {
    let mut state = RuleState {
        last_phase: initial_phase,
        buffer: String::new(),
        counters: BTreeMap::new(),
        visited: BTreeSet::new(),
        unlocked: false,
    };
    if rule.number() == 18 {
        state.set_counter("digit", 1);
    }
    if rule.number() == 12 {
        state
            .visited
            .insert((initial_phase.knob_open, initial_phase.handle_open));
    }
    state.unlocked = unlock_predicate(rule, &state) || initial_phase.door_open;
    state
}

/// Advances a rule by one observed phase.
///
/// Edge events are phase differences against `state.last_phase`. If both
/// knob and handle flip in one step, the knob edge is processed first
/// against an intermediate phase, then the handle edge; the generator
/// never produces simultaneous edges, so the fixed order only pins down
/// determinism for adversarial inputs (see [`step_rule_strict`]).
pub fn step_rule(
    rule: RuleId,
    state: &RuleState,
    new_phase: PartPhaseVector,
) -> (RuleState, LockVector) {
    let mut next = state.clone();
    let knob_edge = new_phase.knob_open != state.last_phase.knob_open;
    let handle_edge = new_phase.handle_open != state.last_phase.handle_open;
    if knob_edge && handle_edge {
        let intermediate = PartPhaseVector {
            knob_open: new_phase.knob_open,
            handle_open: state.last_phase.handle_open,
            door_open: state.last_phase.door_open,
        };
        apply_phase(rule, &mut next, intermediate);
    }
    apply_phase(rule, &mut next, new_phase);
    let locks = lock_vector(rule, &next);
    (next, locks)
}

/// Like [`step_rule`] but rejects steps with simultaneous knob and handle
/// edges instead of ordering them.
pub fn step_rule_strict(
    rule: RuleId,
    state: &RuleState,
    new_phase: PartPhaseVector,
) -> Result<(RuleState, LockVector), RuleError> {
    let knob_edge = new_phase.knob_open != state.last_phase.knob_open;
    let handle_edge = new_phase.handle_open != state.last_phase.handle_open;
    if knob_edge && handle_edge {
        return Err(RuleError::RuleStateMismatch { rule });
    }
    Ok(step_rule(rule, state, new_phase))
}

/// Locks implied by the current task state.
///
/// The door is unlocked when the rule's predicate holds or the latch is
/// set. Rule 4 pins the knob while the handle is closed; rule 14 pins the
/// handle while the knob is closed.
pub fn lock_vector(rule: RuleId, state: &RuleState) -> LockVector {
    let phase = state.last_phase;
    LockVector {
        knob_locked: rule.number() == 4 && !phase.handle_open,
        handle_locked: rule.number() == 14 && !phase.knob_open,
        door_locked: !(state.unlocked || unlock_predicate(rule, state)),
    }
}

/// Single-phase transition: applies at most one knob edge and one handle
/// edge worth of task-memory updates, then refreshes the latch.
fn apply_phase(rule: RuleId, state: &mut RuleState, phase: PartPhaseVector) {
    let knob = edge_between(state.last_phase.knob_open, phase.knob_open);
    let handle = edge_between(state.last_phase.handle_open, phase.handle_open);
    transition(rule, state, phase, knob, handle);
    if rule.number() == 12 {
        state.visited.insert((phase.knob_open, phase.handle_open));
    }
    state.last_phase = phase;
    if phase.door_open {
        state.unlocked = true;
    }
}

/// Per-rule task-memory update for one phase observation.
///
/// `knob`/`handle` are the edges between `state.last_phase` and `phase`.
/// Phase conditions inside a rule (for instance "while the handle is
/// open") read `phase`, the phase at which the edge is observed.
fn transition(
    rule: RuleId,
    state: &mut RuleState,
    phase: PartPhaseVector,
    knob: Option<Edge>,
    handle: Option<Edge>,
) {
    let cap = buffer_len(rule);
    match rule.number() {
        // Pure part-phase rules: no task memory.
        1 | 2 | 3 | 4 | 14 => {}

        // Password "001": any knob flip is '0', any handle flip is '1'.
        5 => {
            if knob.is_some() {
                state.push_digit('0', cap);
            }
            if handle.is_some() {
                state.push_digit('1', cap);
            }
        }

        // Password "010": a knob flip is '0' while the handle is open,
        // '1' otherwise. Handle flips input nothing.
        6 => {
            if knob.is_some() {
                let digit = if phase.handle_open { '0' } else { '1' };
                state.push_digit(digit, cap);
            }
        }

        // Opposite states with both joints toggled at least once.
        7 => {
            if knob.is_some() {
                state.bump("knob_toggles");
            }
            if handle.is_some() {
                state.bump("handle_toggles");
            }
        }

        // Knob open plus an even (>= 2) number of handle toggles.
        8 => {
            if handle.is_some() {
                state.bump("handle_toggles");
            }
        }

        // Password "1001": knob flip is '1', handle flip is '0'.
        9 => {
            if knob.is_some() {
                state.push_digit('1', cap);
            }
            if handle.is_some() {
                state.push_digit('0', cap);
            }
        }

        // Password "0110": a handle flip is '0' while the knob is open,
        // '1' while it is closed. Knob flips input nothing.
        10 => {
            if handle.is_some() {
                let digit = if phase.knob_open { '0' } else { '1' };
                state.push_digit(digit, cap);
            }
        }

        // Password "1010" from knob edges only: closing is '1',
        // opening is '0'.
        11 => match knob {
            Some(Edge::Closed) => state.push_digit('1', cap),
            Some(Edge::Opened) => state.push_digit('0', cap),
            None => {}
        },

        // Visited set maintained in apply_phase.
        12 => {}

        // Knob toggle count divisible by three (and non-zero).
        13 => {
            if knob.is_some() {
                state.bump("knob_toggles");
            }
        }

        // Knob open count equals handle close count, minimum two each;
        // both reset to zero the moment either count reaches three.
        15 => {
            if knob == Some(Edge::Opened) {
                state.bump("knob_opens");
            }
            if handle == Some(Edge::Closed) {
                state.bump("handle_closes");
            }
            if state.counter("knob_opens") >= 3 || state.counter("handle_closes") >= 3 {
                state.set_counter("knob_opens", 0);
                state.set_counter("handle_closes", 0);
            }
        }

        // Password "1110": closing the knob is '1', opening the handle '0'.
        16 => {
            if knob == Some(Edge::Closed) {
                state.push_digit('1', cap);
            }
            if handle == Some(Edge::Opened) {
                state.push_digit('0', cap);
            }
        }

        // Product of toggle counts equals four.
        17 => {
            if knob.is_some() {
                state.bump("knob_toggles");
            }
            if handle.is_some() {
                state.bump("handle_toggles");
            }
        }

        // Password "123": knob flips increment a digit counter, a handle
        // flip appends the counter and resets it to its starting value 1.
        18 => {
            if knob.is_some() {
                state.set_counter("digit", state.counter("digit") + 1);
            }
            if handle.is_some() {
                let digit = state.counter("digit").min(9);
                state.push_digit(char::from_digit(digit, 10).unwrap(), cap);
                state.set_counter("digit", 1);
            }
        }

        // Gated passwords "01" / "11": knob edges recorded only while the
        // handle is open; opening is '1', closing is '0'. The buffer is
        // never cleared on a failed attempt.
        19 | 20 => {
            if phase.handle_open {
                match knob {
                    Some(Edge::Opened) => state.push_digit('1', cap),
                    Some(Edge::Closed) => state.push_digit('0', cap),
                    None => {}
                }
            }
        }

        _ => unreachable!("RuleId guarantees 1..=20"),
    }
}

/// The rule's instantaneous unlock condition over (phase, task memory).
fn unlock_predicate(rule: RuleId, state: &RuleState) -> bool {
    let phase = state.last_phase;
    match rule.number() {
        1 | 4 => phase.knob_open && phase.handle_open,
        2 => phase.knob_open,
        3 => phase.handle_open,
        5 => state.buffer == "001",
        6 => state.buffer == "010",
        7 => {
            (phase.knob_open != phase.handle_open)
                && state.counter("knob_toggles") >= 1
                && state.counter("handle_toggles") >= 1
        }
        8 => {
            let toggles = state.counter("handle_toggles");
            phase.knob_open && toggles >= 2 && toggles % 2 == 0
        }
        9 => state.buffer == "1001",
        10 => state.buffer == "0110",
        11 => state.buffer == "1010",
        12 => state.visited.len() == 4,
        13 => {
            let toggles = state.counter("knob_toggles");
            phase.handle_open && toggles > 0 && toggles % 3 == 0
        }
        14 => !phase.knob_open && phase.handle_open,
        15 => {
            let opens = state.counter("knob_opens");
            opens >= 2 && opens == state.counter("handle_closes")
        }
        16 => state.buffer == "1110",
        17 => state.counter("knob_toggles") * state.counter("handle_toggles") == 4,
        18 => state.buffer == "123",
        19 => state.buffer == "01" && !phase.handle_open,
        20 => state.buffer == "11" && !phase.handle_open,
        _ => unreachable!("RuleId guarantees 1..=20"),
    }
}

/// Verbatim catalog description of a rule.
pub fn rule_description(rule: RuleId) -> &'static str {
    match rule.number() {
        1 => "The safe door remains locked unless both the knob and handle are open.",
        2 => "The safe door remains locked unless the knob is open.",
        3 => "The safe door remains locked unless the handle is open.",
        4 => "The safe door remains locked unless both the knob and handle are open. Additionally, the knob cannot be opened unless the handle is open.",
        5 => "The safe door remains locked unless the password '001' is entered. Changing the knob's state from open to closed (or vice versa) inputs a '0', while changing the handle's state inputs a '1'.",
        6 => "The safe door remains locked unless the password '010' is entered. When handle is open, changing the knob's state from open to closed (or vice versa) inputs a '0'; otherwise it inputs a '1'.",
        7 => "The safe door unlocks when the knob and handle are in opposite states (one open, one closed). Both must have been toggled at least once.",
        8 => "The safe door unlocks only if the knob is open and the handle has been toggled an even number of times greater than one.",
        9 => "The safe door unlocks after receiving binary input '1001'. Knob state change = '1', handle state change = '0'. Input buffer holds last 4 digits.",
        10 => "The safe door unlocks when the password '0110' is entered. Handle state change while knob is open inputs '0', handle change while knob closed inputs '1'.",
        11 => "The safe door unlocks after the password '1010' is entered. Knob state open\u{2192}closed = '1', closed\u{2192}open = '0'. Handle changes ignored.",
        12 => "The safe door unlocks after knob and handle have been in all possible state combinations (open/open, open/closed, closed/open, closed/closed).",
        13 => "The safe door unlocks when the handle is open and the knob has changed state a non-zero number of times that is divisible by 3.",
        14 => "The safe door remains locked unless the knob is closed and the handle is open. Additionally, the handle cannot be opened unless the knob is open.",
        15 => "The safe door unlocks when knob open count equals handle close count (minimum 2 each). Counts reset if either reaches 3.",
        16 => "The safe door unlocks after the password '1110' is entered. Closing the knob inputs '1', opening the handle inputs '0'. Input buffer holds last 4 digits.",
        17 => "The safe door unlocks when the product of the knob and handle toggle counts equals 4. A toggle is defined as any state change.",
        18 => "The safe door unlocks when the password '123' is entered. A knob state change increments a counter, a handle state change appends the counter value to the buffer and resets the counter. The counter starts at 1. The buffer holds the last 3 digits.",
        19 => "The safe door unlocks after entering the password '01' via knob interactions (0 = knob closes, 1 = knob opens). Knob events are recorded only when the handle is open. The door unlocks only when the handle is closed after the correct password has been entered.",
        20 => "The safe door unlocks after entering the password '11' via knob interactions (0 = knob closes, 1 = knob opens). Knob events are recorded only when the handle is open. The door unlocks only when the handle is closed after the correct password has been entered.",
        _ => unreachable!("RuleId guarantees 1..=20"),
    }
}

// ---------------------------------------------------------------------------
// Solver and verifier
// ---------------------------------------------------------------------------

/// Abstract environment step shared by solver, verifier and replay: apply
/// one op to (phase, rule state), honoring locks.
///
/// Returns None when the op is inadmissible (toggle of a locked joint, or
/// door-open while locked). A successful OpenDoor yields the door-open
/// phase and is terminal for search purposes.
fn abstract_step(
    rule: RuleId,
    phase: PartPhaseVector,
    state: &RuleState,
    op: AbstractOp,
) -> Option<(PartPhaseVector, RuleState, LockVector)> {
    let locks = lock_vector(rule, state);
    let new_phase = match op {
        AbstractOp::ToggleKnob => {
            if locks.knob_locked {
                return None;
            }
            phase.with(JointName::Knob, !phase.knob_open)
        }
        AbstractOp::ToggleHandle => {
            if locks.handle_locked {
                return None;
            }
            phase.with(JointName::Handle, !phase.handle_open)
        }
        AbstractOp::OpenDoor => {
            if locks.door_locked {
                return None;
            }
            phase.with(JointName::Door, true)
        }
    };
    let (next_state, next_locks) = step_rule(rule, state, new_phase);
    Some((new_phase, next_state, next_locks))
}

/// Shortest unlocking sequence by breadth-first search over
/// (part-phase, task-state), ties broken by the fixed alphabet order.
///
/// Toggles of locked joints are not expanded and a door-open is terminal.
pub fn solve_rule(
    rule: RuleId,
    initial_phase: PartPhaseVector,
    max_depth: usize,
) -> Result<Vec<AbstractOp>, RuleError> {
    assert!(max_depth >= 1, "max_depth must be at least 1");
    let initial_state = init_rule(rule, initial_phase);
    if initial_phase.door_open {
        return Ok(Vec::new());
    }

    type Node = (PartPhaseVector, RuleState);
    let mut queue: VecDeque<(Node, Vec<AbstractOp>)> = VecDeque::new();
    let mut seen: HashSet<Node> = HashSet::new();
    let start = (initial_phase, initial_state);
    seen.insert(start.clone());
    queue.push_back((start, Vec::new()));

    while let Some(((phase, state), path)) = queue.pop_front() {
        if path.len() >= max_depth {
            continue;
        }
        for op in AbstractOp::ALL {
            let Some((next_phase, next_state, _)) = abstract_step(rule, phase, &state, op) else {
                continue;
            };
            let mut next_path = path.clone();
            next_path.push(op);
            if op == AbstractOp::OpenDoor {
                return Ok(next_path);
            }
            let node = (next_phase, next_state);
            if seen.insert(node.clone()) {
                queue.push_back((node, next_path));
            }
        }
    }
    Err(RuleError::NotSolvable { rule, max_depth })
}

/// Replays an op sequence through the automaton from `initial_phase`.
///
/// Returns the final (phase, state, locks); inadmissible ops (locked
/// joints) leave the phase unchanged but still step the rule.
pub fn replay_ops(
    rule: RuleId,
    initial_phase: PartPhaseVector,
    ops: &[AbstractOp],
) -> (PartPhaseVector, RuleState, LockVector) {
    let mut phase = initial_phase;
    let mut state = init_rule(rule, initial_phase);
    let mut locks = lock_vector(rule, &state);
    for &op in ops {
        match abstract_step(rule, phase, &state, op) {
            Some((p, s, l)) => {
                phase = p;
                state = s;
                locks = l;
            }
            None => {
                let (s, l) = step_rule(rule, &state, phase);
                state = s;
                locks = l;
            }
        }
    }
    (phase, state, locks)
}

/// Exhaustive verification report for one rule.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub rule: RuleId,
    pub depth: usize,
    /// Every distinct unlocking op sequence of minimal length.
    pub minimal_sequences: Vec<Vec<AbstractOp>>,
    pub minimal_len: Option<usize>,
    pub sequences_explored: u64,
    /// Door-open attempts that were rejected because the rule was unsatisfied.
    pub rejected_open_attempts: u64,
    /// Rejected attempts that nevertheless changed the door phase (must be 0).
    pub safety_violations: u64,
}

/// Enumerates every op sequence up to `depth` and collects the set of
/// minimal unlocking sequences, confirming along the way that the door
/// never opens on a non-satisfying prefix.
///
/// Unlike the solver, nothing is pruned or deduplicated; toggles of locked
/// joints are kept as no-op attempts. The state space (three phase bits
/// plus bounded rule memory) stays enumerable for depth <= 12.
pub fn verify_rule_exhaustive(
    rule: RuleId,
    initial_phase: PartPhaseVector,
    depth: usize,
) -> VerifyReport {
    assert!(depth <= 12, "exhaustive verification is capped at depth 12");
    let mut report = VerifyReport {
        rule,
        depth,
        minimal_sequences: Vec::new(),
        minimal_len: None,
        sequences_explored: 0,
        rejected_open_attempts: 0,
        safety_violations: 0,
    };
    let state = init_rule(rule, initial_phase);
    let mut prefix = Vec::new();
    enumerate(
        rule,
        initial_phase,
        &state,
        depth,
        &mut prefix,
        &mut report,
    );
    report
}

fn enumerate(
    rule: RuleId,
    phase: PartPhaseVector,
    state: &RuleState,
    budget: usize,
    prefix: &mut Vec<AbstractOp>,
    report: &mut VerifyReport,
) {
    if budget == 0 {
        return;
    }
    for op in AbstractOp::ALL {
        report.sequences_explored += 1;
        prefix.push(op);
        match abstract_step(rule, phase, state, op) {
            Some((next_phase, next_state, _)) if op == AbstractOp::OpenDoor => {
                // Successful unlock; the sequence ends here.
                debug_assert!(next_phase.door_open && next_state.unlocked);
                let len = prefix.len();
                if report.minimal_len.map_or(true, |best| len < best) {
                    report.minimal_len = Some(len);
                    report.minimal_sequences.clear();
                }
                if report.minimal_len == Some(len) {
                    report.minimal_sequences.push(prefix.clone());
                }
            }
            Some((next_phase, next_state, _)) => {
                enumerate(rule, next_phase, &next_state, budget - 1, prefix, report);
            }
            None => {
                // Rejected attempt: joint pinned or door still locked.
                if op == AbstractOp::OpenDoor {
                    report.rejected_open_attempts += 1;
                    if phase.door_open {
                        report.safety_violations += 1;
                    }
                }
                let (next_state, _) = step_rule(rule, state, phase);
                enumerate(rule, phase, &next_state, budget - 1, prefix, report);
            }
        }
        prefix.pop();
    }
}

// ---------------------------------------------------------------------------
// Catalog export
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub rule_id: RuleId,
    pub description: &'static str,
    pub buffer_len: usize,
    pub counters_used: Vec<&'static str>,
    pub min_solution_len: usize,
}

/// Catalog of all twenty rules, with solver-derived minimal lengths.
pub fn rule_catalog() -> Vec<CatalogEntry> {
    RuleId::all()
        .map(|rule| {
            let solution = solve_rule(rule, PartPhaseVector::ALL_CLOSED, 12)
                .expect("every shipped rule is solvable within depth 12");
            CatalogEntry {
                rule_id: rule,
                description: rule_description(rule),
                buffer_len: buffer_len(rule),
                counters_used: counters_used(rule).to_vec(),
                min_solution_len: solution.len(),
            }
        })
        .collect()
}
