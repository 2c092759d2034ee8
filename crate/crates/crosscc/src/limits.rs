//! Wall-clock and memory budgets turned into interrupt callbacks.

use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Limits {
    /// Wall-clock budget per Groebner call.
    pub max_seconds: f64,
    /// Resident-set budget in bytes.
    pub max_memory: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_seconds: 900.0, max_memory: 8 << 30 }
    }
}

/// A started budget. `exceeded` is cheap enough to poll from inner loops.
#[derive(Debug, Clone)]
pub struct Budget {
    start: Instant,
    wall: Duration,
    max_memory: u64,
}

impl Budget {
    pub fn start(limits: &Limits) -> Self {
        Budget { start: Instant::now(), wall: Duration::from_secs_f64(limits.max_seconds.max(0.0)), max_memory: limits.max_memory }
    }

    pub fn with_seconds(limits: &Limits, seconds: f64) -> Self {
        Budget::start(&Limits { max_seconds: seconds, ..*limits })
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn exceeded(&self) -> bool {
        self.start.elapsed() > self.wall || resident_bytes().is_some_and(|b| b > self.max_memory)
    }
}

/// Resident set size of this process, where `/proc` is available.
pub fn resident_bytes() -> Option<u64> {
    let statm = std::fs::read_to_string("/proc/self/statm").ok()?;
    let pages: u64 = statm.split_whitespace().nth(1)?.parse().ok()?;
    Some(pages * 4096)
}

/// Parses `8G`, `512M`, `100k` or a plain byte count.
pub fn parse_bytes(s: &str) -> Option<u64> {
    let s = s.trim();
    let (num, mul) = match s.chars().last()? {
        'k' | 'K' => (&s[..s.len() - 1], 1u64 << 10),
        'm' | 'M' => (&s[..s.len() - 1], 1 << 20),
        'g' | 'G' => (&s[..s.len() - 1], 1 << 30),
        't' | 'T' => (&s[..s.len() - 1], 1 << 40),
        _ => (s, 1),
    };
    let v: f64 = num.trim().parse().ok()?;
    (v >= 0.0).then(|| (v * mul as f64) as u64)
}
