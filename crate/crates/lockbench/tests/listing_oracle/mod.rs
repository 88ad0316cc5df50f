//! Independent transcription of the reference password-lock check program.
//!
//! This is a line-for-line port of the published reference implementation
//! of the gated password lock (knob events recorded only while the handle
//! is open, two-digit rolling buffer, unlock on match with the handle
//! closed, or once the door itself is open). It was written before the
//! engine's transition functions and deliberately mirrors the reference
//! structure instead of the engine's: the fidelity test replays random
//! phase sequences through both and demands zero lock-state mismatches.

pub struct PasswordLockOracle {
    password: String,
    last_knob: Option<bool>,
    input_buffer: Vec<char>,
}

impl PasswordLockOracle {
    pub fn new(password: &str) -> Self {
        PasswordLockOracle {
            password: password.to_string(),
            last_knob: None,
            input_buffer: Vec::new(),
        }
    }

    /// One check call. Returns true when the door is locked.
    pub fn check(&mut self, knob: bool, handle: bool, door: bool) -> bool {
        // state.setdefault('last_knob', knob)
        let last_knob = *self.last_knob.get_or_insert(knob);

        // Allow password input only when the handle is open
        if handle {
            // Record knob rotation events ("1" for open, "0" for close)
            if knob != last_knob {
                self.input_buffer.push(if knob { '1' } else { '0' });
                // Keep the last two events only
                if self.input_buffer.len() > 2 {
                    let start = self.input_buffer.len() - 2;
                    self.input_buffer = self.input_buffer[start..].to_vec();
                }
            }
        }

        // Unlock if the correct input is entered and the handle is closed,
        // or if the door is already open
        let entered: String = self.input_buffer.iter().collect();
        let locked = !((entered == self.password && !handle) || door);

        // Update the last knob state
        self.last_knob = Some(knob);
        locked
    }

    pub fn buffer(&self) -> String {
        self.input_buffer.iter().collect()
    }
}
