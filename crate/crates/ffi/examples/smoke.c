/* Build: cargo build -p lctkit-ffi
 *        cc crates/ffi/examples/smoke.c -Icrates/ffi/include \
 *           target/debug/liblctkit_ffi.a -lpthread -ldl -lm -o smoke
 */
#include <stdio.h>

#include "lctkit.h"

static int report(const char *what, LctStatus status, LctRational r) {
    if (status != LCT_STATUS_OK) {
        fprintf(stderr, "%s: status %d: %s\n", what, (int)status, lct_last_error());
        return 1;
    }
    if (r.infinite)
        printf("%s = inf\n", what);
    else
        printf("%s = %lld/%lld\n", what, (long long)r.num, (long long)r.den);
    return 0;
}

int main(void) {
    int failures = 0;
    LctRational r;

    const uint32_t nu[] = {6, 4};
    size_t k = 0;
    failures += report("orbit (6,4)", lct_orbit_epsilon(nu, 2, &r, &k), r);
    printf("  witness k = %zu\n", k);

    LctRootSystem *g2 = NULL;
    if (lct_root_system_new("G2", &g2) == LCT_STATUS_OK) {
        failures += report("lct G2", lct_arrangement_lct(g2, &r), r);
        lct_root_system_free(g2);
    } else {
        failures++;
    }

    failures += report("power measure n=10 l=3", lct_power_measure(10, 3, &r), r);

    LctStatus bad = lct_power_measure(1, 3, &r);
    printf("invalid input gives status %d: %s\n", (int)bad, lct_last_error());

    return failures == 0 ? 0 : 1;
}
