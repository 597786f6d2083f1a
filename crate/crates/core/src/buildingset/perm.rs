/// Calls `f` once for every permutation of `0..k` (Heap's algorithm).
pub fn for_each_permutation<F: FnMut(&[usize])>(k: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    f(&perm);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
