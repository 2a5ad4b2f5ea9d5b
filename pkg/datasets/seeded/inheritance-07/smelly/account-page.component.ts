import { Component, Injectable } from '@angular/core';

export abstract class BaseAccountPageComponent {
  pageTitle = '';
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}

@Component({
  selector: 'app-account-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class AccountPageComponent extends BaseAccountPageComponent {
  pageTitle = 'Account Page';
}
