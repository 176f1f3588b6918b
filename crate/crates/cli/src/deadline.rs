use std::time::{Duration, Instant};

use stabctx_core::budget::Budget;

/// Wall-clock budget. The clock is read every few polls.
#[derive(Clone, Debug)]
pub struct Deadline {
    end: Instant,
    polls: u32,
    hit: bool,
}

impl Deadline {
    pub fn after(limit: Duration) -> Self {
        Deadline {
            end: Instant::now() + limit,
            polls: 0,
            hit: false,
        }
    }

    pub fn seconds(s: f64) -> Self {
        Self::after(Duration::from_secs_f64(s))
    }

    pub fn expired(&self) -> bool {
        self.hit
    }
}

impl Budget for Deadline {
    fn exhausted(&mut self) -> bool {
        if self.hit {
            return true;
        }
        self.polls = self.polls.wrapping_add(1);
        if self.polls % 16 == 0 && Instant::now() >= self.end {
            self.hit = true;
        }
        self.hit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expires() {
        let mut d = Deadline::after(Duration::ZERO);
        let hit = (0..64).any(|_| d.exhausted());
        assert!(hit && d.expired());
        let mut long = Deadline::seconds(3600.0);
        assert!((0..1000).all(|_| !long.exhausted()));
    }
}
