//! Data-parallel helpers. With the `parallel` feature these fan out over the
//! rayon pool; without it every call runs on the calling thread. Results are
//! always assembled in index order, so output never depends on scheduling.

/// How a batch of independent work items is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Maps `f` over `0..len`, giving each worker its own scratch state from
/// `init`.
pub fn map_init<S, T, I, F>(exec: Execution, len: usize, init: I, f: F) -> Vec<T>
where
    T: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..len)
                .into_par_iter()
                .map_init(&init, |s, i| f(s, i))
                .collect()
        }
        _ => {
            let mut state = init();
            (0..len).map(|i| f(&mut state, i)).collect()
        }
    }
}

/// Like [`map_init`], but visits items in the sequence `order` (a
/// permutation of `0..order.len()`); element `i` of the result is still
/// `f(_, i)`.
pub fn map_init_ordered<S, T, I, F>(exec: Execution, order: &[usize], init: I, f: F) -> Vec<T>
where
    T: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize) -> T + Sync + Send,
{
    let visited = map_init(exec, order.len(), init, |s, k| f(s, order[k]));
    let mut slots: Vec<Option<T>> = (0..order.len()).map(|_| None).collect();
    for (&i, t) in order.iter().zip(visited) {
        slots[i] = Some(t);
    }
    slots
        .into_iter()
        .map(|t| t.expect("order is a permutation"))
        .collect()
}

pub fn map<T, F>(exec: Execution, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_init(exec, len, || (), |_, i| f(i))
}

/// Number of worker threads parallel calls will use.
pub fn threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Caps the global worker pool. Only the first call takes effect; returns
/// false if the pool was already initialised.
pub fn set_threads(n: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        false
    }
}
