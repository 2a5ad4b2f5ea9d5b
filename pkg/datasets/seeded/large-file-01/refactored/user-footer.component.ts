import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-user-footer', template: `<p>{{ title }}</p>` })
export class UserFooterComponent { title = 'User footer'; }
