#![allow(dead_code)]

use leglab::{orient, FrontDiagram, FrontEvent, OrientedFront};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random single-component front with roughly `max_events` events:
/// either a random word or a random braid closure.
pub fn random_front(rng: &mut impl Rng, max_events: usize) -> OrientedFront {
    if rng.random_bool(0.5) {
        random_word_front(rng, max_events)
    } else {
        random_braid_front(rng, max_events)
    }
}

/// Rejection sampling of random words.
pub fn random_word_front(rng: &mut impl Rng, max_events: usize) -> OrientedFront {
    loop {
        let mut events = Vec::new();
        let mut strands = 0usize;
        while events.len() + strands / 2 < max_events {
            let close = strands >= 2 && rng.random_bool(0.3);
            let cross = strands >= 2 && rng.random_bool(0.5);
            if close {
                events.push(FrontEvent::right(rng.random_range(1..strands)));
                strands -= 2;
                if strands == 0 {
                    break;
                }
            } else if cross {
                events.push(FrontEvent::cross(rng.random_range(1..strands)));
            } else {
                events.push(FrontEvent::left(rng.random_range(1..=strands + 1)));
                strands += 2;
            }
        }
        while strands > 0 {
            events.push(FrontEvent::right(rng.random_range(1..strands)));
            strands -= 2;
        }
        if let Ok(f) = orient(&FrontDiagram::new("random", events)) {
            return f;
        }
    }
}

pub fn word(w: &str) -> OrientedFront {
    orient(&FrontDiagram::from_word("w", w).unwrap()).unwrap()
}

/// Closure of a random braid. Negative generators become a zigzag whose
/// crossing has the other sign.
pub fn random_braid_front(rng: &mut impl Rng, max_events: usize) -> OrientedFront {
    loop {
        let n = rng.random_range(1..=3usize);
        let mut events: Vec<FrontEvent> = (1..=n).map(FrontEvent::left).collect();
        let budget = max_events.saturating_sub(2 * n).max(1);
        while events.len() + n < budget + n {
            let g = rng.random_range(1..=n.max(2) - 1) + n;
            if n == 1 || rng.random_bool(0.6) {
                if n > 1 {
                    events.push(FrontEvent::cross(g));
                } else {
                    break;
                }
            } else if rng.random_bool(0.5) {
                events.extend([FrontEvent::left(g), FrontEvent::cross(g + 1), FrontEvent::right(g + 2)]);
            } else {
                events.extend([FrontEvent::left(g + 2), FrontEvent::cross(g + 1), FrontEvent::right(g)]);
            }
        }
        events.extend((1..=n).rev().map(FrontEvent::right));
        if let Ok(f) = orient(&FrontDiagram::new("braid", events)) {
            return f;
        }
    }
}
