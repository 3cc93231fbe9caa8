#include <stdio.h>
#include "sma.h"

int main(void) {
    SmaArray *a = NULL;
    SmaStatus st = sma_generate(7, 4, &a);
    if (st != SMA_STATUS_OK) {
        fprintf(stderr, "%s: %s\n", sma_status_name(st), sma_last_error());
        return 1;
    }
    char *csv = NULL;
    sma_to_csv(a, &csv);
    printf("%s", csv);
    sma_string_free(csv);
    printf("same-row: %s\n", sma_status_name(sma_verify(a, SMA_CHECK_SAME_ROW)));
    sma_array_free(a);

    st = sma_generate(6, 2, &a);
    printf("6x2: %s (%s)\n", sma_status_name(st), sma_last_error());
    return 0;
}
