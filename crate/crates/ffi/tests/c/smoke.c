#include <math.h>
#include <stdio.h>
#include <string.h>

#include "disclab.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    double half = 0.5;
    DisclabPointSet *ps = NULL;
    CHECK(disclab_points_new(1, &half, 1, &ps) == DISCLAB_STATUS_OK);
    double v = 0.0;
    CHECK(disclab_l2(ps, DISCLAB_KIND_EXTREME, &v) == DISCLAB_STATUS_OK);
    CHECK(fabs(v - 1.0 / sqrt(12.0)) < 1e-15);

    DisclabMcResult r;
    CHECK(disclab_mc_lp(ps, DISCLAB_KIND_PERIODIC, 2.0, 100000, 7, &r) == DISCLAB_STATUS_OK);
    CHECK(r.samples == 100000 && r.seed == 7 && r.std_error > 0.0);
    CHECK(fabs(r.value - 1.0 / sqrt(6.0)) < 4.0 * r.std_error);
    disclab_points_free(ps);

    DisclabPointSet *vdc = NULL;
    CHECK(disclab_vdc_prefix(2, 4, &vdc) == DISCLAB_STATUS_OK);
    double buf[4];
    CHECK(disclab_points_copy(vdc, buf, 4) == DISCLAB_STATUS_OK);
    CHECK(buf[0] == 0.0 && buf[1] == 0.5 && buf[2] == 0.25 && buf[3] == 0.75);
    DisclabPointSet *lifted = NULL;
    CHECK(disclab_lift(vdc, 4, &lifted) == DISCLAB_STATUS_OK);
    CHECK(disclab_points_dim(lifted) == 2 && disclab_points_len(lifted) == 4);
    disclab_points_free(lifted);
    disclab_points_free(vdc);

    double bad[2] = {0.2, 1.5};
    DisclabPointSet *none = NULL;
    CHECK(disclab_points_new(1, bad, 2, &none) == DISCLAB_STATUS_OUT_OF_RANGE);
    CHECK(none == NULL);
    const char *msg = disclab_last_error();
    CHECK(msg != NULL && strstr(msg, "row 2") != NULL);
    CHECK(disclab_l2(NULL, DISCLAB_KIND_STAR, &v) == DISCLAB_STATUS_NULL_POINTER);
    puts("ok");
    return 0;
}
