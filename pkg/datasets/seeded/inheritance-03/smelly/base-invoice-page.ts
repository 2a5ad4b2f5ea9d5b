export abstract class BaseInvoicePageComponent {
  pageTitle = '';
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}
