/* Prints dim Ext^i(M(e), M(f)) over the 4-cycle algebra through the C interface. */
#include <stdio.h>
#include "gentle.h"

static const char *C4 =
    "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
    "arrow b 1 2\narrow e 2 3\narrow g 2 6\narrow d 6 5\narrow a 5 1\narrow f 4 5\n"
    "rel b g\nrel g d\nrel d a\nrel a b\n";

int main(void) {
    GentleAlgebraHandle *h = NULL;
    if (gentle_algebra_parse(C4, &h) != GENTLE_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", gentle_last_error());
        return 1;
    }
    size_t dims[8];
    size_t period = 0, start = 0;
    if (gentle_ext_dims(h, "e", "f", dims, 8) != GENTLE_STATUS_OK ||
        gentle_ext_period(h, "e", "f", &period, &start) != GENTLE_STATUS_OK) {
        fprintf(stderr, "ext: %s\n", gentle_last_error());
        gentle_algebra_free(h);
        return 1;
    }
    for (size_t i = 0; i < 8; i++)
        printf("%zu%s", dims[i], i + 1 < 8 ? "," : "\n");
    printf("period=%zu\n", period);

    if (gentle_ext_dim(h, "b g", "f", 1, &period) != GENTLE_STATUS_INVALID_STRING) {
        gentle_algebra_free(h);
        return 1;
    }
    gentle_algebra_free(h);
    return 0;
}
