//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over rayon's pool
//! unless the calling thread has selected [`Mode::Sequential`]. Without the
//! feature everything runs on the calling thread. Results are identical in
//! both modes because every helper preserves input order.

use std::cell::Cell;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Parallel,
    Sequential,
}

thread_local! {
    static MODE: Cell<Mode> = const { Cell::new(Mode::Parallel) };
}

/// Mode in effect on this thread. Always `Sequential` without the `parallel` feature.
pub fn mode() -> Mode {
    if cfg!(feature = "parallel") {
        MODE.with(Cell::get)
    } else {
        Mode::Sequential
    }
}

/// Runs `f` with `m` selected on this thread, restoring the previous mode afterwards.
pub fn with_mode<R>(m: Mode, f: impl FnOnce() -> R) -> R {
    struct Restore(Mode);
    impl Drop for Restore {
        fn drop(&mut self) {
            MODE.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(MODE.with(|c| c.replace(m)));
    f()
}

/// Order-preserving map.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == Mode::Parallel && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Applies `f` to each element in place.
pub fn for_each_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode() == Mode::Parallel && items.len() > 1 {
        use rayon::prelude::*;
        items.par_iter_mut().for_each(f);
        return;
    }
    items.iter_mut().for_each(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(&xs, |x| x * x);
        let b = with_mode(Mode::Sequential, || map(&xs, |x| x * x));
        assert_eq!(a, b);
        assert_eq!(mode(), if cfg!(feature = "parallel") { Mode::Parallel } else { Mode::Sequential });
    }
}
