"""
Configuración del Verificador de Identidades
Constantes del motor de series, de los enumeradores y de los reportes
"""

import os
from pathlib import Path

# ========== CONFIGURACIÓN DE ARCHIVOS ==========

# Directorio raíz del repositorio
# pipeline/ → identidades/ → apps/ → web/ → raíz
BASE_DIR = Path(__file__).resolve().parent.parent.parent.parent.parent

# Rutas de directorios (rutas absolutas)
DIR_OEIS = BASE_DIR / "data" / "oeis"
DIR_OUTPUT = BASE_DIR / "data" / "output"
DIR_LOGS = BASE_DIR / "logs"

# Caché para archivos b descargados con --fetch
DIR_CACHE_OEIS = Path(
    os.environ.get('IDENTIDADES_CACHE_OEIS', str(DIR_OEIS / "cache"))
)

# Crear directorios si no existen
for _dir in [DIR_OEIS, DIR_OUTPUT, DIR_LOGS]:
    _dir.mkdir(parents=True, exist_ok=True)

# Nombres de archivos
PREFIJO_OUTPUT = "REPORTE_VERIFICACION"
URL_ARCHIVO_B = "https://oeis.org/A{numero:06d}/b{numero:06d}.txt"
TIEMPO_ESPERA_DESCARGA = 30  # segundos

# ========== CONFIGURACIÓN DEL MOTOR DE SERIES ==========

# Exponentes que se conservan por encima del orden N. Absorben los factores
# q^{-1}, q^{-2} de las sumas en modo Laurent sin perder exactitud.
GUARDA_LAURENT = 8

# El offset mínimo admitido es -2 * GUARDA_LAURENT
OFFSET_MINIMO = -2 * GUARDA_LAURENT

# Términos consecutivos sin aumento del exponente mínimo antes de declarar
# divergencia en sumar_terminos
LIMITE_TERMINOS_ESTANCADOS = 64

# ========== CONFIGURACIÓN DE LA VERIFICACIÓN ==========

# Cotas por defecto
N_ENUMERATIVO = 40   # identidades con lados enumerativos
N_SERIES = 200       # identidades puramente de series
N_PARES = 30         # conteo de pares de Stembridge (crecimiento cuadrático)
N_TRANSPORTE = 35    # lados de transporte por biyección

# Trabajadores para verify --id all
TRABAJOS_POR_DEFECTO = 1

# Estados de un reporte
ESTADOS = ('PASS', 'FAIL', 'FLAGGED')

# ========== CONFIGURACIÓN DE FORMATO DE TEXTO ==========

# Sufijo de parte rayada en la sintaxis textual de sobreparticiones
MARCA_RAYADA = '~'
SEPARADOR_PARTES = ','

# Formatos de salida soportados por la CLI
FORMATOS_SALIDA = ('table', 'csv', 'records', 'xlsx')

# ========== CONFIGURACIÓN DE FORMATO EXCEL ==========

COLORES = {
    'VERDE': '#C6EFCE',      # PASS
    'AMARILLO': '#FFEB9C',   # FLAGGED
    'ROJO': '#FFC7CE',       # FAIL
    'AZUL': '#366092',       # Encabezado
    'GRIS': '#D9D9D9'        # Sin valor (fuera de la cota del lado)
}

COLOR_POR_ESTADO = {
    'PASS': 'VERDE',
    'FLAGGED': 'AMARILLO',
    'FAIL': 'ROJO',
}

ANCHOS_COLUMNAS = {
    'id': 28,
    'N': 8,
    'status': 10,
    'first_mismatch': 16,
    'elapsed_ms': 12,
    'error': 50,
    'n': 6,
}

FORMATO_ARCHIVO = '%Y%m%d_%H%M%S'       # Formato para nombres de archivo

# ========== CONFIGURACIÓN DE LOGGING ==========

LOG_LEVEL = os.environ.get('IDENTIDADES_LOG_LEVEL', 'INFO')  # DEBUG, INFO, WARNING, ERROR, CRITICAL
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# Escribir también a logs/verificacion_<timestamp>.log
LOG_A_ARCHIVO = os.environ.get('IDENTIDADES_LOG_ARCHIVO', 'True').lower() in ('true', '1', 'yes')

# ========== CONFIGURACIÓN AVANZADA ==========

# Generar hoja de resumen en Excel
GENERAR_HOJA_RESUMEN = True

# Omitir elapsed_ms en los registros (salida byte a byte reproducible)
REPORTES_DETERMINISTICOS = False

# ========== MENSAJES DEL SISTEMA ==========

MENSAJES = {
    'inicio': '🔎 Iniciando verificación de identidades...',
    'registro_cargado': '📚 Registro de identidades cargado',
    'verificacion_completa': '🧮 Verificación completada',
    'reporte_generado': '📊 Reporte generado',
    'persistencia_completa': '💾 Resultados guardados en base de datos',
    'proceso_completo': '✅ Verificación completada exitosamente',
    'proceso_con_fallas': '❌ Hay identidades probadas que no coinciden',
    'error_identidad': '❌ Error al verificar identidad',
    'sin_identidades': '⚠️ No se seleccionó ninguna identidad'
}
