import { Component, Injectable } from '@angular/core';
import { BaseInvoicePageComponent } from './base-invoice-page';

@Component({
  selector: 'app-invoice-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class InvoicePageComponent extends BaseInvoicePageComponent {
  pageTitle = 'Invoice Page';
}
