/* Builds K5 and a 6-cycle, decides and computes their 2-admissibility. */
#include <stdio.h>
#include <stdlib.h>

#include "adm2.h"

static int check(Adm2Status status, const char *what) {
    if (status != ADM2_STATUS_OK) {
        const char *message = adm2_last_error_message();
        fprintf(stderr, "%s: %s (%s)\n", what, adm2_status_str(status),
                message ? message : "no detail");
        return 0;
    }
    return 1;
}

int main(void) {
    size_t k5_edges[20];
    size_t count = 0;
    for (size_t u = 0; u < 5; u++) {
        for (size_t v = u + 1; v < 5; v++) {
            k5_edges[2 * count] = u;
            k5_edges[2 * count + 1] = v;
            count++;
        }
    }
    Adm2Graph *k5 = NULL;
    if (!check(adm2_graph_from_edges(5, k5_edges, count, &k5), "k5")) return 1;

    bool yes = false;
    Adm2Ordering *witness = NULL;
    if (!check(adm2_decide(k5, 4, 0, &yes, &witness), "decide")) return 1;
    printf("decide K5 p=4: %s\n", yes ? "YES" : "NO");
    if (!check(adm2_decide(k5, 3, 0, &yes, NULL), "decide")) return 1;
    printf("decide K5 p=3: %s\n", yes ? "YES" : "NO");

    size_t order[5];
    size_t value = 0;
    if (!check(adm2_ordering_copy(witness, order, 5), "copy")) return 1;
    if (!check(adm2_verify_ordering(k5, order, 5, &value), "verify")) return 1;
    printf("witness verifies to %zu\n", value);
    adm2_ordering_free(witness);
    adm2_graph_free(k5);

    size_t cycle_edges[12] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 0};
    Adm2Graph *c6 = NULL;
    if (!check(adm2_graph_from_edges(6, cycle_edges, 6, &c6), "c6")) return 1;
    if (!check(adm2_compute(c6, 0, &value, NULL), "compute")) return 1;
    printf("adm2 C6 = %zu\n", value);
    adm2_graph_free(c6);

    Adm2Status status = adm2_graph_from_edges(3, cycle_edges, 6, &c6);
    printf("out of range: %s\n", adm2_status_str(status));
    return status == ADM2_STATUS_INVALID_ARGUMENT ? 0 : 1;
}
