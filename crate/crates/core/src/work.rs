//! Elementary-step accounting for the generation pipeline.

/// Counts elementary steps (random draws, list insertions, containment
/// tests, emitted adjacency entries). Only ratios against input/output size
/// are meaningful.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounter {
    pub steps: u64,
}

impl WorkCounter {
    #[inline]
    pub fn add(&mut self, steps: usize) {
        self.steps += steps as u64;
    }

    #[inline]
    pub fn tick(&mut self) {
        self.steps += 1;
    }
}
