/* C interface to the texture-nilm appliance identification library.
 *
 * Every function returns a tn_status. On failure a description is available
 * from tn_last_error() until the next call on the same thread. Handles are
 * opaque and must be released with their matching *_free function.
 */
#ifndef TEXTURE_NILM_H
#define TEXTURE_NILM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TEXTURE_NILM_BUILDING)
#    define TN_API __declspec(dllexport)
#  else
#    define TN_API __declspec(dllimport)
#  endif
#else
#  define TN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2..4 double as CLI exit codes. */
typedef enum tn_status {
  TN_OK = 0,
  TN_ERR_INVALID_ARGUMENT = 1,
  TN_ERR_CONFIG = 2,
  TN_ERR_IO = 3,
  TN_ERR_NO_EVENTS = 4,
  TN_ERR_DATA = 5,
  TN_ERR_BUFFER_TOO_SMALL = 6,
  TN_ERR_INTERNAL = 7
} tn_status;

typedef enum tn_fusion {
  TN_FUSION_SUM = 0,
  TN_FUSION_CONCAT = 1,
  TN_FUSION_MULT = 2,
  TN_FUSION_LBP_ONLY = 3,
  TN_FUSION_WLD_ONLY = 4
} tn_fusion;

typedef enum tn_metric { TN_METRIC_EUCLIDEAN = 0, TN_METRIC_COSINE = 1 } tn_metric;
typedef enum tn_weighting { TN_WEIGHT_UNIFORM = 0, TN_WEIGHT_INVERSE_DISTANCE = 1 } tn_weighting;

#define TN_HISTOGRAM_BINS 256

TN_API const char* tn_version(void);
TN_API const char* tn_last_error(void);
TN_API const char* tn_status_name(tn_status status);

/* Releases strings returned through char** out-parameters. */
TN_API void tn_string_free(char* str);

/* ---- stateless feature extraction ---------------------------------- */

/* Quantizes `window` onto a square grid. `cells` must hold at least
 * ceil(sqrt(len))^2 bytes; the required size is reported in *rows x *cols
 * even when TN_ERR_BUFFER_TOO_SMALL is returned. */
TN_API tn_status tn_reshape(const double* window, size_t len, uint8_t* cells, size_t cells_cap, size_t* rows,
                            size_t* cols);

TN_API tn_status tn_lbp_histogram(const uint8_t* cells, size_t rows, size_t cols, uint32_t bins[TN_HISTOGRAM_BINS]);

TN_API tn_status tn_wld_histogram(const uint8_t* cells, size_t rows, size_t cols, size_t orientation_bins,
                                  size_t excitation_bins, double epsilon, uint32_t bins[TN_HISTOGRAM_BINS]);

/* Writes 256 values (512 for concat) to `out`. */
TN_API tn_status tn_fuse(const uint32_t lbp[TN_HISTOGRAM_BINS], const uint32_t wld[TN_HISTOGRAM_BINS],
                         tn_fusion strategy, double* out, size_t out_cap, size_t* out_len);

/* ---- nearest-neighbor classifier ----------------------------------- */

typedef struct tn_knn tn_knn;

TN_API tn_status tn_knn_create(size_t dims, size_t k, tn_metric metric, tn_weighting weighting, tn_knn** out);
TN_API void tn_knn_free(tn_knn* knn);
TN_API tn_status tn_knn_add(tn_knn* knn, const double* values, const char* label);
TN_API size_t tn_knn_size(const tn_knn* knn);
/* Copies the predicted label, NUL-terminated, into `label`. */
TN_API tn_status tn_knn_predict(const tn_knn* knn, const double* query, char* label, size_t label_cap);

/* ---- end-to-end pipeline ------------------------------------------- */

typedef struct tn_pipeline tn_pipeline;

TN_API tn_status tn_pipeline_open(const char* config_path, tn_pipeline** out);
TN_API void tn_pipeline_free(tn_pipeline* pipeline);

/* Keys: strategy (sum|concat|mult|lbp|wld|all), k, metric, weighting,
 * folds, seed, out. */
TN_API tn_status tn_pipeline_set(tn_pipeline* pipeline, const char* key, const char* value);

TN_API tn_status tn_pipeline_synth(tn_pipeline* pipeline);
TN_API tn_status tn_pipeline_extract(tn_pipeline* pipeline);
TN_API tn_status tn_pipeline_eval(tn_pipeline* pipeline, double* accuracy, double* macro_f1);

/* Human-readable summary of the last successful command, one item per line. */
TN_API const char* tn_pipeline_summary(const tn_pipeline* pipeline);

/* Path of the report JSON written by tn_pipeline_eval. */
TN_API const char* tn_pipeline_report_path(const tn_pipeline* pipeline);

/* Renders a report JSON file as text tables. Free with tn_string_free. */
TN_API tn_status tn_report_render(const char* report_path, char** text);

#ifdef __cplusplus
}
#endif

#endif /* TEXTURE_NILM_H */
