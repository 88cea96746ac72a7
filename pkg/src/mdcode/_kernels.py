"""numba kernels behind the compiled decoders in ``fastdecode``.

Both return ``(count, w, r, bad)`` where ``bad`` is the offending byte
offset on accumulator overflow and -1 otherwise. ``out`` must hold at least
three values per input byte.
"""

import numba as nb
import numpy as np

F1, F2, F3 = np.uint32(1 << 31), np.uint32(1 << 30), np.uint32(1 << 29)
ONE = np.uint64(1)


@nb.njit(cache=True)
def byte_kernel(rows, data, out, w, r):
    n = 0
    wlen = 64 - _clz(w)
    for i in range(data.size):
        t = rows[r, data[i]]
        if t & F1:
            k = (t >> 6) & 7
            if wlen + k > 64:
                return n, w, r, i
            out[n] = (w << np.uint64(k)) | np.uint64(t & 0x3F)
            n += 1
            if t & F2:
                out[n] = (ONE << np.uint64((t >> 13) & 7)) | np.uint64((t >> 9) & 0xF)
                n += 1
                k = (t >> 20) & 7
                v = (ONE << np.uint64(k)) | np.uint64((t >> 16) & 0xF)
                if t & F3:
                    out[n] = v
                    n += 1
                    w, wlen = ONE, 1
                else:
                    w, wlen = v, k + 1
                r = (t >> 23) & 7
            else:
                k = (t >> 16) & 7
                w = (ONE << np.uint64(k)) | np.uint64((t >> 9) & 0x7F)
                wlen = k + 1
                r = (t >> 19) & 7
        else:
            k = (t >> 10) & 0xF
            if wlen + k > 64:
                return n, w, r, i
            w = (w << np.uint64(k)) | np.uint64(t & 0x3FF)
            wlen += k
            r = (t >> 14) & 7
    return n, w, r, -1


@nb.njit(cache=True)
def bit_kernel(step, data, out, w, r):
    n = 0
    wlen = 64 - _clz(w)
    for i in range(data.size):
        byte = data[i]
        for j in range(7, -1, -1):
            b = (byte >> j) & 1
            k = step[r, b, 1]
            if k:
                if wlen + k > 64:
                    return n, w, r, i
                w = (w << np.uint64(k)) | np.uint64(step[r, b, 0])
                wlen += k
            if step[r, b, 2]:
                out[n] = w
                n += 1
                w, wlen = ONE, 1
            r = step[r, b, 3]
    return n, w, r, -1


@nb.njit(cache=True)
def _clz(x):
    c = 0
    bit = np.uint64(1) << np.uint64(63)
    while c < 64 and not (x & bit):
        c += 1
        bit >>= np.uint64(1)
    return c
